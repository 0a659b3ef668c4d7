#
# Entry point for python -m hilbtan
#
from hilbtan.cli import main

main()
