# Ein Modul je Unterbefehl; jedes stellt register(subparsers) und run(args, context) bereit.
