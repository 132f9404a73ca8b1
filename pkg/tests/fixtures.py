"""Reference bijection tables for n = 8 and n = 9, grouped by k."""
from crankmex.partitions import parse_partition


def _rows(block):
    return [tuple(parse_partition(cell) for cell in row.split("|")) for row in block]


# X_e(8,k) | F*(8,k+1); Konan states are listed separately below
TABLE_AB_8 = {
    0: _rows(["1^8 | 1^8"]),
    1: _rows(["7 1 | 6 2", "6 1 1 | 5 2 1", "5 1^3 | 4 2 1 1", "4 1^4 | 3 2 1^3", "3 1^5 | 2 2 1^4"]),
    2: _rows(["4 3 1 | 4 2 2", "3 3 1 1 | 3 2 2 1", "3 2 1^3 | 2^3 1 1"]),
    3: _rows(["3 2 2 1 | 2^4"]),
}

# X_e(8,k) -> list of (staircase, kappa) states and the rules between them
KONAN_8 = {
    "1^8": ([((1,), (1,) * 7)], []),
    "7 1": ([((1,), (7,))], []),
    "6 1 1": ([((1,), (6, 1))], []),
    "5 1^3": ([((1,), (5, 1, 1))], []),
    "4 1^4": ([((1,), (4, 1, 1, 1))], []),
    "3 1^5": ([((1,), (3, 1, 1, 1, 1))], []),
    "4 3 1": ([((1,), (4, 3)), ((1,), (5, 2))], ["i"]),
    "3 3 1 1": ([((1,), (3, 3, 1)), ((1,), (4, 2, 1))], ["i"]),
    "3 2 1^3": ([((3, 2, 1), (1, 1)), ((1,), (3, 2, 1, 1))], ["ii"]),
    "3 2 2 1": ([((3, 2, 1), (2,)), ((1,), (3, 2, 2))], ["ii"]),
}

TABLE_BC_8 = {
    0: _rows(["1^8 | 1^8"]),
    1: _rows(["6 2 | 6 1 1", "5 2 1 | 5 1^3", "4 2 1 1 | 4 1^4", "3 2 1^3 | 3 1^5", "2 2 1^4 | 2 1^6"]),
    2: _rows(["4 2 2 | 4 2 1 1", "3 2 2 1 | 3 2 1^3", "2^3 1 1 | 2 2 1^4"]),
    3: _rows(["2^4 | 2^3 1 1"]),
}

TABLE_CD_8 = {
    0: _rows(["1^8 | 8"]),
    1: _rows(["6 1 1 | 5 2 1", "5 1^3 | 4 3 1", "4 1^4 | 4 4", "3 1^5 | 5 3", "2 1^6 | 6 2"]),
    2: _rows(["4 2 1 1 | 3 2 2 1", "3 2 1^3 | 3 3 2", "2 2 1^4 | 4 2 2"]),
    3: _rows(["2^3 1 1 | 2^4"]),
}

TABLE_ALL_9 = {
    0: _rows(["1^9 | 1^9 | 1^9 | 9"]),
    1: _rows([
        "8 1 | 7 2 | 7 1 1 | 6 2 1",
        "7 1 1 | 6 2 1 | 6 1^3 | 5 3 1",
        "6 1^3 | 5 2 1 1 | 5 1^4 | 4 4 1",
        "5 1^4 | 4 2 1^3 | 4 1^5 | 5 4",
        "4 1^5 | 3 2 1^4 | 3 1^6 | 6 3",
        "3 1^6 | 2 2 1^5 | 2 1^7 | 7 2",
    ]),
    2: _rows([
        "5 3 1 | 5 2 2 | 5 2 1 1 | 4 2 2 1",
        "4 4 1 | 3^3 | 3 3 1^3 | 3^3",
        "4 3 1 1 | 4 2 2 1 | 4 2 1^3 | 3 3 2 1",
        "3 3 1^3 | 3 2 2 1 1 | 3 2 1^4 | 4 3 2",
        "3 2 1^4 | 2^3 1^3 | 2 2 1^5 | 5 2 2",
    ]),
    3: _rows([
        "3 3 2 1 | 3 2^3 | 3 2 2 1 1 | 2^4 1",
        "3 2 2 1 1 | 2^4 1 | 2^3 1^3 | 3 2^3",
    ]),
}
