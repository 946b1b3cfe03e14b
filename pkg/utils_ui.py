"""
hollab - UI Utilities & Homepage
"""

import streamlit as st

from hollab import VERSION
from hollab.reference_data import SUITE_NAMES

# =============================================================================
# GLOBAL STYLES
# =============================================================================

def inject_global_styles():
    """Light theme shared by every page."""
    st.markdown("""
    <style>
    @import url('https://fonts.googleapis.com/css2?family=Cormorant+Garamond:wght@400;600&family=Montserrat:wght@300;400;600&display=swap');

    .stApp {
        background: linear-gradient(160deg, #faf9f7 0%, #f5f3ef 50%, #faf9f7 100%);
    }

    #MainMenu {visibility: hidden;}
    footer {visibility: hidden;}

    h1 {
        text-align: center !important;
        font-family: 'Cormorant Garamond', serif !important;
        color: #2c2c2c !important;
    }

    h2, h3, .section-title {
        font-family: 'Cormorant Garamond', serif !important;
        color: #8a6c4a !important;
        letter-spacing: 1px !important;
    }

    .action-card {
        background: white;
        border: 1px solid #e8e4dc;
        border-radius: 10px;
        padding: 28px;
        margin-bottom: 16px;
        min-height: 180px;
    }

    div[data-testid="stButton"] > button {
        border: 1.5px solid #8a6c4a !important;
        font-family: 'Montserrat', sans-serif !important;
        font-weight: 600 !important;
        border-radius: 8px !important;
    }

    div[data-testid="stButton"] > button:hover {
        background: #8a6c4a !important;
        color: white !important;
    }
    </style>
    """, unsafe_allow_html=True)


def render_welcome_section():
    st.markdown("""
    <div style="text-align: center; margin-bottom: 48px; padding: 0 20px;">
        <h1>hollab</h1>
        <p style="text-align: center; margin: 12px auto 0; max-width: 850px; font-family: 'Cormorant Garamond', serif; font-size: 1.3rem; color: #6a6a6a;">
            Homology and cohomology of holomorphs Hol(Z/p^r), with machine checks
            of every structural claim the tables rest on.
        </p>
    </div>
    """, unsafe_allow_html=True)


def render_navigation_section():
    st.markdown('<h2 class="section-title">Tools</h2>', unsafe_allow_html=True)

    nav1, nav2 = st.columns(2)
    with nav1:
        st.markdown("""
        <div class="action-card">
            <div style="font-size:1.4rem; margin-bottom:12px;">Homology tables</div>
            <p style="color:#777;">H_q(Hol(Z/p^r); Z) from the explicit resolution next to the closed form,
            mod-p ranks, CSV and XLSX export.</p>
        </div>
        """, unsafe_allow_html=True)
        if st.button("Open homology tables", key="nav_homology", use_container_width=True):
            st.session_state['page'] = 'homology'
            st.rerun()

    with nav2:
        st.markdown(f"""
        <div class="action-card">
            <div style="font-size:1.4rem; margin-bottom:12px;">Verification suites</div>
            <p style="color:#777;">{len(SUITE_NAMES)} seeded suites with pass/fail per claim and
            witnesses for failures.</p>
        </div>
        """, unsafe_allow_html=True)
        if st.button("Open verification suites", key="nav_verify", use_container_width=True):
            st.session_state['page'] = 'verify'
            st.rerun()


def render_footer():
    st.markdown(f"""
    <div style="text-align: center; padding: 32px 0;">
        <p style="color: #aaa; font-size: 0.7rem; letter-spacing: 3px; text-transform: uppercase;">
            hollab · v{VERSION}
        </p>
    </div>
    """, unsafe_allow_html=True)


def show_home_page():
    """Main function rendering the homepage."""
    inject_global_styles()
    render_welcome_section()
    render_navigation_section()
    render_footer()
