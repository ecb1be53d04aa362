"""Tool registration for the YM_Beta MCP server."""
from . import beta, numerics


def register_all_tools(mcp):
    """Register all tool modules with the MCP server instance."""
    beta.register_tools(mcp)
    numerics.register_tools(mcp)
