#
# Tests the logger class.
#
import hilbtan as ht
import logging
import unittest
import os


class TestLogger(unittest.TestCase):
    def test_logger(self):
        logger = ht.logger
        self.assertEqual(logger.level, 30)
        ht.set_logging_level("INFO")
        self.assertEqual(logger.level, 20)
        ht.set_logging_level("ERROR")
        self.assertEqual(logger.level, 40)
        ht.set_logging_level("VERBOSE")
        self.assertEqual(logger.level, 15)
        ht.set_logging_level("NOTICE")
        self.assertEqual(logger.level, 25)
        ht.set_logging_level("SUCCESS")
        self.assertEqual(logger.level, 35)

        ht.set_logging_level("SPAM")
        self.assertEqual(logger.level, 5)
        ht.logger.spam("Test spam level")
        ht.logger.verbose("Test verbose level")
        ht.logger.notice("Test notice level")
        ht.logger.success("Test success level")

        # reset
        ht.set_logging_level("WARNING")

    def test_log_to_file(self):
        cwd = os.getcwd()
        filename = os.path.join(cwd, "temp_log_file")
        ht.log_to_file(filename)
        ht.logger.warning("This should write to file")
        assert os.path.isfile(filename + ".log")
        root = logging.getLogger()
        for handler in list(root.handlers):
            if isinstance(handler, logging.FileHandler):
                handler.close()
                root.removeHandler(handler)
        os.remove(filename + ".log")


if __name__ == "__main__":
    unittest.main()
