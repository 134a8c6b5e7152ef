"""
The tools package contains the command line front end (``specocc``), the
svg chart emitters and the output directory manifest.
"""
