"""
hollab - Main Application
Navigation hub connecting the home page, the homology tables and the verification suites
"""

import streamlit as st
import sys
import os

# =============================================================================
# PAGE CONFIGURATION (Must be first Streamlit command)
# =============================================================================
st.set_page_config(
    page_title="hollab",
    page_icon="∂",
    layout="wide",
    initial_sidebar_state="collapsed"
)

# =============================================================================
# PATH SETUP
# =============================================================================
current_dir = os.path.dirname(__file__)
sys.path.insert(0, current_dir)

# =============================================================================
# IMPORTS
# =============================================================================
from utils_ui import show_home_page, inject_global_styles

try:
    from hollab import lab_ui
    LAB_AVAILABLE = True
except ImportError as e:
    LAB_AVAILABLE = False
    lab_error = str(e)

PAGES = {
    'homology': 'render_homology_section',
    'verify': 'render_verify_section',
}

# =============================================================================
# SESSION STATE
# =============================================================================
if 'page' not in st.session_state:
    st.session_state['page'] = 'home'

# =============================================================================
# PAGE ROUTING
# =============================================================================
page = st.session_state['page']

if page == 'home':
    show_home_page()

elif page in PAGES:
    inject_global_styles()

    col1, col2, col3 = st.columns([1, 6, 1])
    with col1:
        if st.button("← Back to Home", key="back_btn", type="secondary"):
            st.session_state['page'] = 'home'
            st.rerun()

    st.markdown("---")

    if LAB_AVAILABLE:
        getattr(lab_ui, PAGES[page])()
    else:
        st.error(f"Module lab_ui not found: {lab_error}")

# FALLBACK
else:
    st.session_state['page'] = 'home'
    st.rerun()
