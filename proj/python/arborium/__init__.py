"""Python access to the arborium C++ core.

Polynomials come back as ``Poly`` objects: a canonical text form plus a list of
``(Fraction, {variable: exponent})`` terms.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from . import _arborium
from ._arborium import AlgebraError, Arbor, ParseError, ValidationError, count_points, make_tn, parse_arbor

__all__ = [
    "AlgebraError",
    "Arbor",
    "ParseError",
    "Poly",
    "ValidationError",
    "count_points",
    "ehrhart",
    "k_poly",
    "laplace",
    "m_triangle",
    "make_tn",
    "parse_arbor",
    "verify",
    "volume",
    "zeta_poly",
]


@dataclass(frozen=True)
class Poly:
    text: str
    terms: tuple

    @classmethod
    def _from_json(cls, payload: str) -> "Poly":
        data = json.loads(payload)
        terms = tuple((Fraction(t["coeff"]), dict(t["exponents"])) for t in data["terms"])
        return cls(data["text"], terms)

    def __str__(self) -> str:
        return self.text

    def __call__(self, **values) -> Fraction:
        """Evaluate at rational values, e.g. ``p(u=2, X=1)``."""
        total = Fraction(0)
        for coeff, exps in self.terms:
            term = coeff
            for var, power in exps.items():
                term *= Fraction(values[var]) ** power
            total += term
        return total


def _arbor(t):
    return parse_arbor(t) if isinstance(t, str) else t


def zeta_poly(t) -> Poly:
    return Poly._from_json(_arborium.zeta_poly(_arbor(t)))


def k_poly(t) -> Poly:
    return Poly._from_json(_arborium.k_poly(_arbor(t)))


def m_triangle(t) -> Poly:
    return Poly._from_json(_arborium.m_triangle(_arbor(t)))


def ehrhart(t) -> Poly:
    return Poly._from_json(_arborium.ehrhart(_arbor(t)))


def laplace(t) -> Poly:
    return Poly._from_json(_arborium.laplace(_arbor(t)))


def volume(t) -> Fraction:
    return Fraction(_arborium.volume(_arbor(t)))


def verify(theorem: str, order: int = 10) -> dict:
    return json.loads(_arborium.verify(theorem, order))
