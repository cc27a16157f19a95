from hexlab.position import Color, VariantConfig, empty_position, place_stones

# One line per acceptance criterion, printed after the run.
acceptance_lines = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_lines:
            terminalreporter.write_line(line)


def all_colorings(board):
    """Every complete two-coloring of a board as a stones dict."""
    cells = board.sorted_cells()
    for bits in range(2 ** len(cells)):
        yield {
            cells[i]: (Color.RED if bits >> i & 1 else Color.BLUE)
            for i in range(len(cells))
        }


def position_with(board, stones, to_move=Color.RED, variant=None):
    p = empty_position(board, variant or VariantConfig(first_player=to_move))
    p = place_stones(p, [(color, cell) for cell, color in sorted(stones.items())])
    from dataclasses import replace

    return replace(p, to_move=to_move, remaining=p.variant.allotment(to_move))
