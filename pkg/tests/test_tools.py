"""MCP tool handlers, exercised through a disposable FastMCP instance."""

import json
from unittest.mock import MagicMock

import pytest


def _register_tools():
    from mcp.server.fastmcp import FastMCP
    from YM_Beta.tools import register_all_tools
    mcp = FastMCP("test")
    register_all_tools(mcp)
    return mcp


def _get_tool(mcp, name):
    tools = mcp._tool_manager._tools
    tool_fn = tools.get(name)
    assert tool_fn is not None, f"Tool '{name}' was not registered"
    return tool_fn


class TestRegistration:
    def test_all_tools_registered(self):
        mcp = _register_tools()
        names = set(mcp._tool_manager._tools)
        assert {"compute_beta", "lie_factors", "diagram_counterterm",
                "log_coefficient", "running_coupling", "decompose_spin4"} <= names


class TestBetaTools:
    @pytest.mark.asyncio
    async def test_compute_beta(self):
        tool_fn = _get_tool(_register_tools(), "compute_beta")
        result = await tool_fn.fn(MagicMock(), algebra="su3", reps=["fund+conj:3"])
        report = json.loads(result)
        assert report["b"] == "-10/1"
        assert report["verdict"] == "asymptotically free"

    @pytest.mark.asyncio
    async def test_compute_beta_framing_from_state(self):
        import YM_Beta.state as state
        state.DEFAULT_FRAMING = "ff"
        tool_fn = _get_tool(_register_tools(), "compute_beta")
        report = json.loads(await tool_fn.fn(MagicMock(), algebra="su3"))
        assert report["b"] == "-52/1"
        assert report["framing"] == "ff"

    @pytest.mark.asyncio
    async def test_compute_beta_bad_framing(self):
        tool_fn = _get_tool(_register_tools(), "compute_beta")
        result = json.loads(await tool_fn.fn(MagicMock(), framing="lagrangian"))
        assert result["status"] == "error"
        assert "Invalid input" in result["message"]

    @pytest.mark.asyncio
    async def test_compute_beta_unknown_algebra(self):
        tool_fn = _get_tool(_register_tools(), "compute_beta")
        result = json.loads(await tool_fn.fn(MagicMock(), algebra="sp4"))
        assert result["status"] == "error"
        assert result["message"].startswith("lie error:")

    @pytest.mark.asyncio
    async def test_lie_factors(self):
        tool_fn = _get_tool(_register_tools(), "lie_factors")
        result = json.loads(await tool_fn.fn(MagicMock(), algebra="su2", rep="fund+conj"))
        assert result["status"] == "ok"
        assert result["data"]["matter"] == "4/1"
        assert result["data"]["factors"] == [{"indices": [1, 2, 3], "casimir": "8/1"}]

    @pytest.mark.asyncio
    async def test_diagram_counterterm(self):
        tool_fn = _get_tool(_register_tools(), "diagram_counterterm")
        result = json.loads(await tool_fn.fn(MagicMock(), label="IV"))
        assert result["data"]["reduced"] == {"BB": "-4/1"}
        assert result["data"]["class"] == "-4/1"

    @pytest.mark.asyncio
    async def test_diagram_counterterm_raw_only(self):
        tool_fn = _get_tool(_register_tools(), "diagram_counterterm")
        result = json.loads(await tool_fn.fn(MagicMock(), label="I"))
        assert "reduced" not in result["data"]
        assert result["data"]["raw"]["J[1][1][2][2]"] == "7/12"

    @pytest.mark.asyncio
    async def test_unknown_diagram(self):
        tool_fn = _get_tool(_register_tools(), "diagram_counterterm")
        result = json.loads(await tool_fn.fn(MagicMock(), label="VII"))
        assert result["status"] == "error"
        assert result["message"].startswith("diagrams error:")


class TestNumericTools:
    @pytest.mark.asyncio
    async def test_log_coefficient(self):
        tool_fn = _get_tool(_register_tools(), "log_coefficient")
        result = json.loads(await tool_fn.fn(MagicMock(), p=1, q=1, r=4))
        assert result["data"]["value"] == "-1/6"

    @pytest.mark.asyncio
    async def test_log_coefficient_unsupported(self):
        tool_fn = _get_tool(_register_tools(), "log_coefficient")
        result = json.loads(await tool_fn.fn(MagicMock(), p=-1, q=0, r=1))
        assert result["message"].startswith("tintegrals error:")

    @pytest.mark.asyncio
    async def test_running_coupling(self):
        tool_fn = _get_tool(_register_tools(), "running_coupling")
        result = json.loads(await tool_fn.fn(MagicMock(), b="-44", g0=1.0, lam_min=0.1, lam_max=100.0, n=7))
        data = result["data"]
        assert len(data["rows"]) == 7
        assert data["rows"][-1]["pole"] is True
        assert 5.0 < data["critical_lambda"] < 7.0

    @pytest.mark.asyncio
    async def test_decompose_spin4(self):
        tool_fn = _get_tool(_register_tools(), "decompose_spin4")
        result = json.loads(await tool_fn.fn(MagicMock(), first=[["1/2", "0"]], second=[["1/2", "0"]]))
        assert result["message"] == "(0,0) + (1,0)"
        assert result["data"] == {"dimension": 4, "trivial_summand": True}

    @pytest.mark.asyncio
    async def test_decompose_spin4_bad_label(self):
        tool_fn = _get_tool(_register_tools(), "decompose_spin4")
        result = json.loads(await tool_fn.fn(MagicMock(), first=[["1/2"]], second=[["0", "0"]]))
        assert result["status"] == "error"
        assert "Invalid input" in result["message"]
