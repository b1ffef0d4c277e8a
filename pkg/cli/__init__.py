from cli.commands import build_parser, load_graphs
