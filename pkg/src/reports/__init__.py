from src.reports.models import InputDigest, Report
from src.reports.render import render_report

__all__ = ["InputDigest", "Report", "render_report"]
