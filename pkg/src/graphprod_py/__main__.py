import sys

from graphprod_py._cli import main

sys.exit(main())
