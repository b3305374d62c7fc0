"""Textual window specifications.

Grammar::

    <id>[:key=val[,key=val...]]     catalog window, e.g. tukey:alpha=0.5
    exp:poly:m=<r>,n=<r>            polynomial-kernel reconstruction
    exp:sine:c=<r>                  scaled-sine-kernel reconstruction
    exp:win:<catalog-spec>          reconstruction wrapping a catalog window

``parse_window_spec`` and ``format_window_spec`` round-trip exactly.
"""
from __future__ import annotations

from typing import Tuple

from .kernels import PolynomialKernel, ScaledSineKernel, WrappedWindowKernel
from .windows import CATALOG, BadParameterError, CatalogWindow, ExpKernelWindow, WindowDef, catalog


class SpecParseError(ValueError):
    """Malformed window spec string."""


def _parse_params(text: str, context: str) -> Tuple[Tuple[str, float], ...]:
    params = []
    for item in text.split(","):
        if "=" not in item:
            raise SpecParseError(f"expected key=value in {context!r}, got {item!r}")
        key, _, val = item.partition("=")
        key = key.strip()
        try:
            params.append((key, float(val)))
        except ValueError:
            raise SpecParseError(f"non-numeric value {val!r} for {key!r} in {context!r}") from None
    return tuple(sorted(params))


def _parse_catalog(text: str) -> CatalogWindow:
    window_id, _, rest = text.partition(":")
    if window_id not in CATALOG:
        raise SpecParseError(f"unknown window id {window_id!r}")
    params = _parse_params(rest, text) if rest else ()
    try:
        return catalog(window_id, **dict(params))
    except BadParameterError as exc:
        raise SpecParseError(str(exc)) from exc


def parse_window_spec(text: str) -> WindowDef:
    """Parse a window spec string into a WindowDef."""
    text = text.strip()
    if not text:
        raise SpecParseError("empty window spec")
    if not text.startswith("exp:"):
        return _parse_catalog(text)

    rest = text[4:]
    kind, _, args = rest.partition(":")
    if kind == "poly":
        p = dict(_parse_params(args, text))
        if set(p) != {"m", "n"}:
            raise SpecParseError(f"exp:poly takes exactly m and n, got {sorted(p)} in {text!r}")
        return ExpKernelWindow(PolynomialKernel(m=p["m"], n=p["n"]))
    if kind == "sine":
        p = dict(_parse_params(args, text)) if args else {"c": 1.0}
        if set(p) != {"c"}:
            raise SpecParseError(f"exp:sine takes exactly c, got {sorted(p)} in {text!r}")
        return ExpKernelWindow(ScaledSineKernel(c=p["c"]))
    if kind == "win":
        inner = _parse_catalog(args)
        return ExpKernelWindow(WrappedWindowKernel(inner.window_id, inner.params))
    raise SpecParseError(f"unknown reconstruction kind {kind!r} in {text!r}")


def _format_params(params: Tuple[Tuple[str, float], ...]) -> str:
    return ",".join(f"{k}={v!r}" for k, v in sorted(params))


def format_window_spec(wdef: WindowDef) -> str:
    """Canonical spec string for a WindowDef."""
    if isinstance(wdef, CatalogWindow):
        if wdef.params:
            return f"{wdef.window_id}:{_format_params(wdef.params)}"
        return wdef.window_id
    if isinstance(wdef, ExpKernelWindow):
        k = wdef.kernel
        if isinstance(k, PolynomialKernel):
            return f"exp:poly:m={k.m!r},n={k.n!r}"
        if isinstance(k, ScaledSineKernel):
            return f"exp:sine:c={k.c!r}"
        if isinstance(k, WrappedWindowKernel):
            if k.params:
                return f"exp:win:{k.window_id}:{_format_params(k.params)}"
            return f"exp:win:{k.window_id}"
    raise TypeError(f"cannot format {wdef!r}")
