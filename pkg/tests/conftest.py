import sys

from hypothesis import settings

# Identity checks below routinely render integers with thousands of digits.
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)

settings.register_profile("recurseq", deadline=None)
settings.load_profile("recurseq")
