# Copyright (c) 2023-2024 Antmicro <www.antmicro.com>
#
# SPDX-License-Identifier: Apache-2.0

"""
Configuration for docs building.
"""

import json
from datetime import datetime
from importlib.resources import files

import jsonschema2md
from antmicro_sphinx_utils.defaults import antmicro_html, antmicro_latex
from antmicro_sphinx_utils.defaults import extensions as default_extensions
from antmicro_sphinx_utils.defaults import (
    myst_enable_extensions as default_myst_enable_extensions,
)
from antmicro_sphinx_utils.defaults import (
    myst_fence_as_directive as default_myst_fence_as_directive,
)
from antmicro_sphinx_utils.defaults import (
    numfig_format as default_numfig_format,
)

from prelie_verifier.resources import schemas
from prelie_verifier.verification import CHECKS


def generate_checks_md() -> str:
    """
    Renders the registry of checks as a Markdown table.
    """
    lines = ["| Identifier | Domain | Description |", "|---|---|---|"]
    for check in CHECKS.values():
        lines.append(
            f"| `{check.check_id}` | {check.domain or '-'} "
            f"| {check.description} |"
        )
    return "\n".join(lines)


def generate_report_schema_md() -> str:
    """
    Renders the JSON report schema as Markdown.
    """
    schema = json.loads(
        files(schemas).joinpath("report_schema.json").read_text()
    )
    parser = jsonschema2md.Parser()
    return "".join(parser.parse_schema(schema)[1:])


# -- General configuration ----------------------------------------------------

# General information about the project.
project = "Prelie Verifier"
basic_filename = "prelie-verifier"
authors = "Antmicro"
copyright = f"{authors}, {datetime.now().year}"

sphinx_immaterial_override_builtin_admonitions = False

numfig = True
numfig_format = default_numfig_format

myst_heading_anchors = 6

extensions = list(set(default_extensions + ["sphinx.ext.napoleon"]))
myst_enable_extensions = default_myst_enable_extensions
myst_fence_as_directive = default_myst_fence_as_directive

myst_substitutions = {
    "project": project,
    "checks_table": generate_checks_md(),
    "report_schema": generate_report_schema_md(),
}

today_fmt = "%Y-%m-%d"

todo_include_todos = False

html_theme = "sphinx_immaterial"

html_last_updated_fmt = today_fmt

html_show_sphinx = False

(html_logo, html_theme_options, html_context) = antmicro_html(
    gh_slug="antmicro/prelie-verifier"
)

html_title = project

(
    latex_elements,
    latex_documents,
    latex_logo,
    latex_additional_files,
) = antmicro_latex(basic_filename, authors, project)
latex_elements.update({"maxlistdepth": "10"})
