import os
import sys

here = os.path.dirname(os.path.abspath(__file__))
module_dir = os.environ.get("QREP_MODULE_DIR")
if module_dir:
    sys.path.insert(0, module_dir)
sys.path.insert(0, os.path.join(here, "..", "..", "python"))
