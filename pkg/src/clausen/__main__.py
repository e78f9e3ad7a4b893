from clausen.cli import main

main()
