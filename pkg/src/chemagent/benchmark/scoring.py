"""Lenient answer scoring.

Trailing text after a correct answer is accepted.  Quantitative answers are
judged by the first numeric token, rounded to two decimals (half-up), which
must equal the gold string exactly.  Qualitative answers must contain the
gold token (case-insensitive, on a word boundary) with no complement token
appearing before it; an absent answer is always incorrect.
"""

from __future__ import annotations

import decimal
import re

COMPLEMENT = {
    "Yes": "No",
    "No": "Yes",
    "High": "Low",
    "Low": "High",
    "True": "False",
    "False": "True",
}

_NUMBER = re.compile(r"[-+]?\d+(?:\.\d+)?(?:[eE][-+]?\d+)?")


def _first_number(text: str) -> decimal.Decimal | None:
    m = _NUMBER.search(text)
    if m is None:
        return None
    try:
        return decimal.Decimal(m.group(0))
    except decimal.InvalidOperation:
        return None


def _round2(value: decimal.Decimal) -> decimal.Decimal:
    return value.quantize(decimal.Decimal("0.01"), rounding=decimal.ROUND_HALF_UP)


def _token_position(answer: str, token: str) -> int | None:
    m = re.search(rf"\b{re.escape(token)}\b", answer, flags=re.IGNORECASE)
    return m.start() if m else None


def score_answer(final_answer: str | None, gold: str, kind: str) -> bool:
    if final_answer is None:
        return False
    answer = final_answer.strip()
    if not answer:
        return False

    if kind == "quantitative":
        value = _first_number(answer)
        if value is None:
            return False
        try:
            gold_value = decimal.Decimal(gold)
        except decimal.InvalidOperation:
            return False
        return _round2(value) == _round2(gold_value)

    gold_token = gold.strip()
    complement = COMPLEMENT.get(gold_token)
    gold_pos = _token_position(answer, gold_token)
    if gold_pos is None:
        return False
    if complement is not None:
        complement_pos = _token_position(answer, complement)
        if complement_pos is not None and complement_pos < gold_pos:
            return False
    return True
