# Write the benchmarking functions here.
# See "Writing benchmarks" in the asv docs for more information.

import hilbtan as ht


class GroebnerBenchmark:
    def setup(self):
        self.I = ht.counterexample_ideal()

    def time_buchberger(self):
        ht.buchberger(self.I)

    def time_buchberger_no_criteria(self):
        ht.buchberger(self.I, criteria=False)


class VerificationBenchmark:
    timeout = 600

    def setup(self):
        self.I = ht.counterexample_ideal()

    def time_verify(self):
        ht.verify_counterexample(self.I)

    def time_graded_solver(self):
        ht.hom_dim_graded(self.I)


class ParityScan:
    timeout = 300

    def time_scan_serial(self):
        ht.parity_scan(4)

    def time_scan_2cpu(self):
        ht.parity_scan(4, manager="ray", nproc=2)
