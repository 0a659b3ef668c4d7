#
# Definitions
#
import hilbtan as ht
import os
import pathlib


ROOT_DIR = str(pathlib.Path(ht.__path__[0]).parent)
MODULE_DIR = os.path.dirname(os.path.abspath(ht.__file__))
IDEAL_DIR = os.path.join(MODULE_DIR, "ideals")
GOLDEN_DIR = os.path.join(MODULE_DIR, "goldens")
