from io import BytesIO

import pandas as pd
import plotly.graph_objects as go

from hollab.lab_ui import create_rank_chart, table_to_csv, table_to_xlsx, ui_key


def test_xlsx_export_round_trips_through_pandas():
    df = pd.DataFrame({"q": [0, 1, 2], "closed": ["Z", "Z/2", "0"]})
    back = pd.read_excel(BytesIO(table_to_xlsx(df, "homology")), sheet_name="homology")
    pd.testing.assert_frame_equal(back, df)


def test_csv_export():
    df = pd.DataFrame({"q": [0], "rank": [1]})
    assert table_to_csv(df) == b"q,rank\n0,1\n"


def test_rank_chart():
    ranks = pd.DataFrame({"q": [0, 1, 2], "rank": [1, 3, 5]})
    fig = create_rank_chart(ranks, 2)
    assert isinstance(fig, go.Figure)
    assert list(fig.data[0].y) == [1, 3, 5]
    assert fig.data[0].name == "dim H^q(-; F_2)"


def test_widget_keys_are_namespaced():
    assert ui_key("verify", "run") == "hollab_verify_run"
