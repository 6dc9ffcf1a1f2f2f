"""Render finished reports as the eight standard result tables.

Scores in [0, 1] print as percentages with one decimal (0.5 -> "50.0");
regression errors print raw. A task absent from the run leaves "-" cells,
and a table renders only when at least one of its cells resolves.
"""

from __future__ import annotations

from statistics import fmean

from ..metrics import EvalReport

Section = tuple[str, list[str], list[str]]  # title, headers, cells


def _metric(reports: dict[str, EvalReport], task: str, name: str):
    rep = reports.get(task)
    if rep is None:
        return None
    for v in rep.values:
        if v.name == name:
            return v.value
    return None


def _avg(values):
    present = [v for v in values if v is not None]
    return fmean(present) if present else None


def _pct(value) -> str:
    return "-" if value is None else f"{100 * value:.1f}"


def _raw(value) -> str:
    return "-" if value is None else f"{value:.3f}"


def _name_conversion(reports) -> Section:
    ems = {
        t: _metric(reports, t, "EM") for t in ("i2f", "i2s", "s2f", "s2i")
    }
    cells = [_avg(ems.values()), ems["i2f"], ems["i2s"], ems["s2f"], ems["s2i"]]
    return (
        "Name Conversion (Exact Match, %)",
        ["Avg.", "I2F", "I2S", "S2F", "S2I"],
        [_pct(c) for c in cells],
    )


def _captioning(reports) -> Section:
    order = [
        ("METEOR", "METEOR"),
        ("BL-2", "BLEU-2"),
        ("BL-4", "BLEU-4"),
        ("R-1", "ROUGE-1"),
        ("R-2", "ROUGE-2"),
        ("R-L", "ROUGE-L"),
    ]
    cells = [
        _pct(_metric(reports, "molecule_captioning", name))
        for _, name in order
    ]
    return "Molecule Captioning (%)", [h for h, _ in order], cells


def _property_prediction(reports) -> Section:
    esol = _metric(reports, "esol_reg", "RMSE")
    lipo = _metric(reports, "lipo_reg", "RMSE")
    bbbp = _metric(reports, "bbbp_cls", "Acc")
    clintox = _metric(reports, "clintox_cls", "Acc")
    cells = [
        _raw(_avg([esol, lipo])),
        _raw(esol),
        _raw(lipo),
        _pct(_avg([bbbp, clintox])),
        _pct(bbbp),
        _pct(clintox),
    ]
    return (
        "Property Prediction (RMSE; Accuracy %)",
        ["Avg.", "ESOL", "LIPO", "Avg.", "BBBP", "ClinTox"],
        cells,
    )


def _reaction(reports) -> Section:
    fs = {
        m: _metric(reports, "forward_synthesis", m)
        for m in ("EM", "FTS", "Validity")
    }
    rs = {
        m: _metric(reports, "retrosynthesis", m)
        for m in ("EM", "FTS", "Validity")
    }
    cells = [
        _avg([fs["EM"], rs["EM"]]),
        fs["EM"], fs["FTS"], fs["Validity"],
        rs["EM"], rs["FTS"], rs["Validity"],
    ]
    return (
        "Chemical Reaction (%)",
        ["Avg. EM", "FS EM", "FS FTS", "FS Valid",
         "Retro EM", "Retro FTS", "Retro Valid"],
        [_pct(c) for c in cells],
    )


def _generation(reports) -> Section:
    cells = [
        _pct(_metric(reports, "description_guided_generation", m))
        for m in ("EM", "FTS", "Validity")
    ]
    return "Description-guided Generation (%)", ["EM", "FTS", "Valid"], cells


def _editing(reports) -> Section:
    sub = {
        t: _metric(reports, t, "SR")
        for t in ("add_component", "delete_component", "substitute_component")
    }
    cells = [
        _avg(sub.values()),
        sub["add_component"],
        sub["delete_component"],
        sub["substitute_component"],
    ]
    return (
        "Molecule Component Editing (Success Rate, %)",
        ["Avg.", "Add Comp.", "Delete Comp.", "Sub. Comp."],
        [_pct(c) for c in cells],
    )


def _opt_single(reports) -> Section:
    sub = {
        t: _metric(reports, t, "SR")
        for t in ("logp_optimization", "mr_optimization", "qed_optimization")
    }
    cells = [
        _avg(sub.values()),
        sub["logp_optimization"],
        sub["mr_optimization"],
        sub["qed_optimization"],
    ]
    return (
        "Single Property Optimization (Success Rate, %)",
        ["Avg.", "logP", "MR", "QED"],
        [_pct(c) for c in cells],
    )


def _opt_multi(reports) -> Section:
    overall = _metric(reports, "multi_property_optimization", "SR")
    subs = [
        _metric(reports, "multi_property_optimization", f"SR/{name}")
        for name in ("BPQ", "MPQ", "BHMQ", "BMPQ", "HMPQ")
    ]
    return (
        "Multi-property Optimization (Success Rate, %)",
        ["Avg.", "BPQ", "MPQ", "BHMQ", "BMPQ", "HMPQ"],
        [_pct(c) for c in [overall] + subs],
    )


_SECTIONS = (
    _name_conversion,
    _captioning,
    _property_prediction,
    _reaction,
    _generation,
    _editing,
    _opt_single,
    _opt_multi,
)


def _block(title: str, headers: list[str], cells: list[str], label: str) -> str:
    head = ["Model"] + headers
    data = [label] + cells
    widths = [max(len(h), len(d)) for h, d in zip(head, data)]
    top = "  ".join(
        h.ljust(w) if i == 0 else h.rjust(w)
        for i, (h, w) in enumerate(zip(head, widths))
    )
    row = "  ".join(
        d.ljust(w) if i == 0 else d.rjust(w)
        for i, (d, w) in enumerate(zip(data, widths))
    )
    return f"{title}\n{top}\n{row}"


def render_tables(reports: dict[str, EvalReport], label: str = "model") -> str:
    blocks = []
    for section in _SECTIONS:
        title, headers, cells = section(reports)
        if any(c != "-" for c in cells):
            blocks.append(_block(title, headers, cells, label))
    if not blocks:
        return "(no task reports to render)"
    return "\n\n".join(blocks)


__all__ = ["render_tables"]
