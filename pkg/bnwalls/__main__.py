import sys

from bnwalls import cli

raise SystemExit(cli.main(sys.argv[1:]))
