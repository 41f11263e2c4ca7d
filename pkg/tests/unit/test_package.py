"""Tests for the package surface."""

from importlib.metadata import version

import twincity


class TestPackage:
    """Tests for package metadata and exports."""

    def test_version_matches_distribution(self):
        assert twincity.__version__ == version("twincity")

    def test_exports_resolve(self):
        for name in twincity.__all__:
            assert hasattr(twincity, name)

    def test_metadata_is_version_only(self):
        dunders = {name for name in vars(twincity) if name.startswith("__") and name.endswith("__")}
        assert "__author__" not in dunders
