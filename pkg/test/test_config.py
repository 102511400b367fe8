import os
import tempfile
import unittest
from unittest import mock

import helper
from config import (
    DIMENSION_CAP_ENV,
    ORBIT_CAP_ENV,
    PROFILES,
    Settings,
    get_profile,
    get_settings,
    list_profiles,
    load_settings,
    set_settings,
)


class ProfileTest(unittest.TestCase):

    def test_quick(self):
        quick = get_profile("quick")
        self.assertFalse(quick.reproduce.run_exceptional)
        self.assertEqual(quick.reproduce.gl_ranks, [2, 3])
        quick.reproduce.gl_ranks.append(9)
        self.assertEqual(PROFILES["quick"].reproduce.gl_ranks, [2, 3])

    def test_unknown(self):
        with self.assertRaises(ValueError):
            get_profile("huge")
        self.assertEqual([p["name"] for p in list_profiles()], ["default", "quick"])

    def test_dict_round_trip(self):
        quick = get_profile("quick")
        self.assertEqual(Settings.from_dict(quick.to_dict()), quick)
        self.assertEqual(Settings.from_dict({}), Settings())


class LoadTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        self.tmp.cleanup()
        helper.reset_settings()

    def test_missing_explicit_path(self):
        with self.assertRaises(FileNotFoundError):
            load_settings(os.path.join(self.tmp.name, "missing.yaml"))

    def test_partial_file(self):
        path = helper.write_file(self.tmp.name, "config.yaml", "limits:\n  dimension_cap: 7\nstrata:\n  pos_box: 1\n")
        settings = load_settings(path)
        self.assertEqual(settings.limits.dimension_cap, 7)
        self.assertEqual(settings.limits.orbit_cap, 10_000_000)
        self.assertEqual(settings.strata.pos_box, 1)
        self.assertEqual(settings.strata.max_tau_degree, 3)

    def test_environment_overrides(self):
        path = helper.write_file(self.tmp.name, "config.yaml", "limits:\n  dimension_cap: 7\n")
        with mock.patch.dict(os.environ, {DIMENSION_CAP_ENV: "12", ORBIT_CAP_ENV: "34"}):
            settings = load_settings(path)
            quick = load_settings(profile="quick")
        self.assertEqual(settings.limits.dimension_cap, 12)
        self.assertEqual(settings.limits.orbit_cap, 34)
        self.assertEqual(quick.limits.dimension_cap, 12)

    def test_process_settings(self):
        custom = get_profile("quick")
        set_settings(custom)
        self.assertIs(get_settings(), custom)
        helper.reset_settings()
        self.assertIsNot(get_settings(), custom)


if __name__ == "__main__":
    unittest.main()
