# Repository package initialization
