"""YM_Beta MCP server: the pipeline as local stdio tools.

Tool handlers live in YM_Beta/tools/*.py; configuration in YM_Beta/state.py.
"""

import logging

from mcp.server.fastmcp import FastMCP

import YM_Beta.state as state
from YM_Beta import __version__
from YM_Beta.tools import register_all_tools

logging.basicConfig(
    level=state.LOG_LEVEL,
    format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
)
logger = logging.getLogger("YM_Beta")

SERVER_INSTRUCTIONS = """\
One-loop beta function of first-order Yang-Mills theory.

All exact numbers are strings "num/den".  b is defined by
beta(g) = b g^3 / (16 pi^2) relative to the algebra's kappa and the framing.
Start with compute_beta; use diagram_counterterm and lie_factors to inspect
the pieces, log_coefficient for single heat-time integrals.
"""

mcp = FastMCP("YM_Beta", instructions=SERVER_INSTRUCTIONS)
register_all_tools(mcp)


@mcp.resource("ymbeta://capabilities")
def resource_capabilities() -> str:
    """Server version and configuration."""
    import json
    from YM_Beta.lie import available_algebras

    return json.dumps({
        "server_version": __version__,
        "algebras": available_algebras(),
        "framing": state.DEFAULT_FRAMING,
        "workers": state.WORKERS,
    })


def main():
    """Run the MCP server."""
    logger.info("YM_Beta server %s starting", __version__)
    mcp.run()


if __name__ == "__main__":
    main()
