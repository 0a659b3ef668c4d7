#
# Tests the parity scan managers
#
import hilbtan as ht
import pandas as pd
import ray
import unittest
from unittest import mock


class scansTest(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.managers = ["serial", "ray"]

    def test_scan_staircase(self):
        ring = ht.RingContext(("x", "y", "z"))
        row = ht.scan_staircase(ring, 1, ((0, 0, 0),))
        self.assertEqual(row["graded"], 3)
        self.assertEqual(row["taylor"], 3)
        self.assertTrue(row["agree"])
        self.assertTrue(row["parity_ok"])
        self.assertEqual(row["generators"], "z, y, x")

    def test_managers_agree(self):
        reports = []
        for manager in self.managers:
            for nproc in (1, 2):
                report = ht.parity_scan(3, manager=manager, nproc=nproc)
                self.assertIsInstance(report, pd.DataFrame)
                self.assertEqual(len(report), 10)
                reports.append(report)
        for report in reports[1:]:
            pd.testing.assert_frame_equal(report, reports[0])

    def test_small_scan(self):
        report = ht.parity_scan(2)
        self.assertEqual(list(report["n"]), [1, 2, 2, 2])
        self.assertEqual(list(report["graded"]), [3, 6, 6, 6])
        self.assertTrue(report["agree"].all())
        self.assertTrue(report["parity_ok"].all())
        self.assertEqual(
            list(report.columns),
            ["n", "generators", "graded", "taylor", "agree", "parity_ok"],
        )

    def test_unknown_manager(self):
        report = ht.parity_scan(1, manager="bad")
        self.assertEqual(len(report), 1)

    def test_failure_is_reported(self):
        def broken(ring, n, cells):
            return {
                "n": n,
                "generators": "x",
                "graded": 4,
                "taylor": 3,
                "agree": False,
                "parity_ok": False,
            }

        with mock.patch("hilbtan.scans.scan_staircase", broken):
            with self.assertRaises(ht.VerificationError) as cm:
                ht.parity_scan(1)
            self.assertEqual(len(cm.exception.mismatches), 1)
            report = ht.parity_scan(1, check=False)
            self.assertFalse(report["agree"].any())

    def test_bad_n_max(self):
        with self.assertRaises(ValueError):
            ht.parity_scan(0)
        with mock.patch("hilbtan.scans.ray.init") as init:
            with self.assertRaises(ValueError):
                ht.parity_scan(0, manager="ray")
            init.assert_not_called()

    def test_cleanup_after_failure(self):
        def broken(self):
            raise RuntimeError("worker died")

        with mock.patch.object(ht.SerialScanManager, "cleanup") as cleanup:
            with mock.patch.object(ht.SerialScanManager, "run_actors", broken):
                with self.assertRaises(RuntimeError):
                    ht.parity_scan(2)
            cleanup.assert_called_once()

        with mock.patch.object(ht.RayScanManager, "run_actors", broken):
            with self.assertRaises(RuntimeError):
                ht.parity_scan(2, manager="ray", nproc=2)
        self.assertFalse(ray.is_initialized())
        report = ht.parity_scan(2, manager="ray")
        self.assertEqual(len(report), 4)


if __name__ == "__main__":
    unittest.main()
