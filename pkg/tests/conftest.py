from __future__ import annotations

from tilecount.grid import CELL_WIDTH


def count_rendered_regions(text: str, rows: int, cols: int) -> int:
    """Flood-fill the cells of a rendered tiling, crossing only undrawn edges.

    Works from the text alone, so it is independent of the Tiling that
    produced it.
    """
    lines = text.split("\n")
    width = cols * (CELL_WIDTH + 1) + 1
    lines = [line.ljust(width) for line in lines]
    assert len(lines) == 2 * rows + 1

    def centre(r: int, c: int) -> tuple[int, int]:
        return 2 * r + 1, c * (CELL_WIDTH + 1) + 1

    seen: set[tuple[int, int]] = set()
    regions = 0
    for r0 in range(rows):
        for c0 in range(cols):
            if (r0, c0) in seen:
                continue
            regions += 1
            stack = [(r0, c0)]
            seen.add((r0, c0))
            while stack:
                r, c = stack.pop()
                y, x = centre(r, c)
                steps = [
                    ((r, c + 1), lines[y][x + CELL_WIDTH]),
                    ((r, c - 1), lines[y][x - 1]),
                    ((r + 1, c), lines[y + 1][x]),
                    ((r - 1, c), lines[y - 1][x]),
                ]
                for (nr, nc), wall in steps:
                    if 0 <= nr < rows and 0 <= nc < cols and wall == " " and (nr, nc) not in seen:
                        seen.add((nr, nc))
                        stack.append((nr, nc))
    return regions
