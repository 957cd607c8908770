"""Compare each extremal coefficient with the conjectured bracket product."""

from g2clasp.conjecture import extremal_cases, product_factors, verify_case
from g2clasp.qint import bracket_text

for case in extremal_cases():
    factors = product_factors(case)
    parts = []
    for f in factors:
        scale = "" if f.ell == 1 else "_q3"
        parts.append(f"{bracket_text(f.num)}{scale}/{bracket_text(f.den)}{scale}")
    product = " * ".join(parts) or "1"
    verdict = verify_case(case).status
    print(f"{case.label:<8} word={case.word or '-':<6} sign={case.sign:+d}  {product}  {verdict}")
