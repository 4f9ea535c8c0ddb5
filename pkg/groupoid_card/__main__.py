from groupoid_card.cli import main

main()
