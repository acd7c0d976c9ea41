from typing import List, Optional

from pydantic import BaseModel, Field


class RougeScore(BaseModel):
    precision: float = Field(ge=0, le=1)
    recall: float = Field(ge=0, le=1)
    f1: float = Field(ge=0, le=1)


class RougeReport(BaseModel):
    rouge1: RougeScore
    rouge2: RougeScore
    rougeL: RougeScore

    @property
    def rouge1_f1(self) -> float:
        return self.rouge1.f1

    @property
    def rouge2_f1(self) -> float:
        return self.rouge2.f1

    @property
    def rougeL_f1(self) -> float:
        return self.rougeL.f1


class KeyphraseTweetScore(BaseModel):
    tweet_id: str
    iou: Optional[float] = None
    jaccard: float = Field(ge=0, le=1)
    match: bool = False


class KeyphraseEvalReport(BaseModel):
    iou_f1: float = Field(ge=0, le=1)
    iou_precision: float = Field(ge=0, le=1)
    iou_recall: float = Field(ge=0, le=1)
    jaccard_mean: float = Field(ge=0, le=1)
    threshold: float
    details: List[KeyphraseTweetScore] = []
