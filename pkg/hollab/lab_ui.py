"""
hollab - Lab Dashboard
======================
Streamlit pages over the library: homology tables with mod-p ranks, and the
verification suites with downloadable reports.
"""

from io import BytesIO

import pandas as pd
import plotly.graph_objects as go
import streamlit as st

from .cli import (
    cohomology_rank_table,
    homology_table,
    report_table,
    validate_homology_inputs,
    validate_rank_inputs,
)
from .exceptions import HollabError
from .methodology import CLAIMS, COMPUTATION_METHODS
from .reference_data import HOMOLOGY_TABLE_GRID, MAX_HOMOLOGY_DEGREE, SUITE_NAMES, get_suite_seed
from .run_logger import run_log
from .verification_suites import run_suite

ACCENT = "#8a6c4a"
PASS_COLOR = "#2e7d32"
FAIL_COLOR = "#c62828"


def ui_key(section: str, name: str) -> str:
    return f"hollab_{section}_{name}"


# =============================================================================
# EXPORT AND CHART HELPERS
# =============================================================================

def table_to_xlsx(df: pd.DataFrame, sheet_name: str = "table") -> bytes:
    """Workbook bytes for ``st.download_button`` (openpyxl engine)."""
    buffer = BytesIO()
    with pd.ExcelWriter(buffer, engine="openpyxl") as writer:
        df.to_excel(writer, sheet_name=sheet_name, index=False)
    data = buffer.getvalue()
    run_log.log_export("xlsx", len(df), len(data))
    return data


def table_to_csv(df: pd.DataFrame) -> bytes:
    data = df.to_csv(index=False).encode("utf-8")
    run_log.log_export("csv", len(df), len(data))
    return data


def create_rank_chart(ranks: pd.DataFrame, p: int) -> go.Figure:
    """Bars of dim H^q(-; F_p) by degree."""
    fig = go.Figure()
    fig.add_trace(go.Bar(
        x=ranks["q"],
        y=ranks["rank"],
        marker_color=ACCENT,
        name=f"dim H^q(-; F_{p})",
        text=ranks["rank"],
        textposition="outside",
    ))
    fig.update_layout(
        template="plotly_white",
        xaxis_title="degree q",
        yaxis_title="rank",
        showlegend=False,
        height=380,
        margin=dict(l=20, r=20, t=30, b=20),
    )
    return fig


# =============================================================================
# HOMOLOGY PAGE
# =============================================================================

def render_homology_section():
    st.title("Homology of Hol(Z/p^r)")
    st.caption("Integral homology from the explicit resolution, compared with the closed form.")

    c1, c2, c3, c4 = st.columns(4)
    with c1:
        p = st.selectbox("p", sorted(HOMOLOGY_TABLE_GRID), key=ui_key("homology", "p"))
    with c2:
        r = st.selectbox("r", HOMOLOGY_TABLE_GRID[p], key=ui_key("homology", "r"))
    with c3:
        qmax = st.slider("qmax", 0, MAX_HOMOLOGY_DEGREE, 6, key=ui_key("homology", "qmax"))
    with c4:
        mode = st.radio("mode", ["both", "computed", "closed"], horizontal=True, key=ui_key("homology", "mode"))

    ok, errors = validate_homology_inputs(p, r, qmax)
    if not ok:
        run_log.log_validation_error("homology", errors)
        for message in errors:
            st.error(message)
        return

    try:
        with st.spinner("Computing homology..."):
            table = homology_table(p, r, qmax, mode)
    except HollabError as e:
        run_log.log_error(type(e).__name__, str(e), {"p": p, "r": r, "qmax": qmax})
        st.error(str(e))
        return

    if "agree" in table.columns:
        differing = int((table["agree"] != "agree").sum())
        if differing:
            st.error(f"{differing} degree(s) differ from the closed form")
        else:
            st.success("Computed and closed-form homology agree in every degree")
    st.dataframe(table, use_container_width=True, hide_index=True)

    d1, d2 = st.columns(2)
    with d1:
        st.download_button("Download CSV", data=table_to_csv(table), file_name=f"homology_p{p}_r{r}.csv",
                           mime="text/csv", use_container_width=True, key=ui_key("homology", "csv"))
    with d2:
        st.download_button(
            "Download XLSX",
            data=table_to_xlsx(table, "homology"),
            file_name=f"homology_p{p}_r{r}.xlsx",
            mime="application/vnd.openxmlformats-officedocument.spreadsheetml.sheet",
            use_container_width=True,
            key=ui_key("homology", "xlsx"),
        )

    rank_ok, _ = validate_rank_inputs(p, r, qmax)
    if rank_ok:
        st.write(f"### Mod-{p} cohomology ranks")
        ranks = cohomology_rank_table(p, r, qmax)
        st.plotly_chart(create_rank_chart(ranks, p), width="stretch", key=ui_key("homology", "chart"))
    else:
        st.info(f"No mod-{p} rank formula for r = {r}; ranks are tabulated for r >= 3.")

    with st.expander("Methods"):
        for method in COMPUTATION_METHODS.values():
            st.markdown(f"**{method.name}**: {method.description}")
            st.code(method.formula)


# =============================================================================
# VERIFY PAGE
# =============================================================================

def render_verify_section():
    st.title("Verification suites")
    c1, c2 = st.columns([2, 1])
    with c1:
        suite = st.selectbox("Suite", SUITE_NAMES, key=ui_key("verify", "suite"))
    with c2:
        seed = st.number_input("Seed", value=get_suite_seed(suite), step=1, key=ui_key("verify", "seed"))

    if not st.button("Run suite", key=ui_key("verify", "run"), use_container_width=True):
        return

    run_log.log_user_action("verify", {"suite": suite, "seed": int(seed)})
    with st.spinner(f"Running {suite}..."):
        report = run_suite(suite, int(seed))

    k1, k2, k3 = st.columns(3)
    k1.metric("Checks", len(report.checks))
    k2.metric("Failed", len(report.failures))
    k3.metric("Elapsed", f"{report.elapsed_ms} ms")

    table = report_table(report)
    table["statement"] = [CLAIMS[cid].statement for cid in table["id"]]
    st.dataframe(
        table.style.map(lambda s: f"color: {PASS_COLOR if s == 'pass' else FAIL_COLOR}", subset=["status"]),
        use_container_width=True,
        hide_index=True,
    )
    for failure in report.failures:
        with st.expander(f"{failure.id} witness"):
            st.json(failure.witness)

    st.download_button("Download JSON report", data=report.to_json(), file_name=f"{suite}_report.json",
                       mime="application/json", use_container_width=True, key=ui_key("verify", "json"))
