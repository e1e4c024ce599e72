"""Published reference energies (fm^-1) for the four golden configurations.

Each row: (n, kappa, label, E(H=0), E(H=0.5)) for the kappa < 0 member and the
same for its doublet partner.
"""

TABLE_PARAMS = {
    1: dict(limit="pseudospin", choice="first", V0=-0.2),
    2: dict(limit="spin", choice="first", V0=0.2),
    3: dict(limit="pseudospin", choice="second", V0=-0.2),
    4: dict(limit="spin", choice="second", V0=0.2),
}

_T1 = """
1 -1 1S1/2 -5.009375979 -5.009327474 | 0 2 0d3/2 -5.009375979 -5.009443876
1 -2 1P3/2 -5.009531153 -5.009443876 | 0 3 0f5/2 -5.009531153 -5.009637797
1 -3 1d5/2 -5.00976379 -5.009637797 | 0 4 0g7/2 -5.00976379 -5.009909113
1 -4 1f7/2 -5.010073741 -5.009909113 | 0 5 0h9/2 -5.010073741 -5.01025765
2 -1 2S1/2 -5.014732692 -5.01468506 | 1 2 1d3/2 -5.014732692 -5.014799366
2 -2 2P3/2 -5.014885072 -5.014799366 | 1 3 1f5/2 -5.014885072 -5.014989796
2 -3 2d5/2 -5.015113521 -5.014989796 | 1 4 1g7/2 -5.015113521 -5.015256229
2 -4 2f7/2 -5.015417895 -5.015256229 | 1 5 1h9/2 -5.015417895 -5.015598495
3 -1 3S1/2 -5.019956641 -5.019909859 | 2 2 2d3/2 -5.019956641 -5.020022126
3 -2 3P3/2 -5.020106303 -5.020022126 | 2 3 2f5/2 -5.020106303 -5.020209158
3 -3 3d5/2 -5.020330677 -5.020209158 | 2 4 2g7/2 -5.020330677 -5.020470839
3 -4 3f7/2 -5.020629623 -5.020470839 | 2 5 2h9/2 -5.020629623 -5.020807004
"""

_T2 = """
0 -2 0P3/2 5.001904476 5.001854816 | 0 1 0P1/2 5.001904476 5.001973989
0 -3 0d5/2 5.002063344 5.001973989 | 0 2 0d3/2 5.002063344 5.002172527
0 -4 0f7/2 5.002301519 5.002172527 | 0 3 0f5/2 5.002301519 5.0024503
0 -5 0g9/2 5.002618847 5.0024503 | 0 4 0g7/2 5.002618847 5.002807131
1 -2 1P3/2 5.007439826 5.007391068 | 1 1 1P1/2 5.007439826 5.007508074
1 -3 1d5/2 5.007595804 5.007508074 | 1 2 1d3/2 5.007595804 5.007703001
1 -4 1f7/2 5.007829648 5.007703001 | 1 3 1f5/2 5.007829648 5.007975724
1 -5 1g9/2 5.008141207 5.007975724 | 1 4 1g7/2 5.008141207 5.008326069
2 -2 2P3/2 5.01283763 5.012789751 | 2 1 2P1/2 5.01283763 5.012904649
2 -3 2d5/2 5.012990798 5.012904649 | 2 2 2d3/2 5.012990798 5.013096063
2 -4 2f7/2 5.013220428 5.013096063 | 2 3 2f5/2 5.013220428 5.013363873
2 -5 2g9/2 5.013526376 5.013363873 | 2 4 2g7/2 5.013526376 5.01370791
"""

_T3 = """
1 -1 1S1/2 -5.106436115 -5.106387711 | 0 2 0d3/2 -5.106436115 -5.10650387
1 -2 1P3/2 -5.106590965 -5.10650387 | 0 3 0f5/2 -5.106590965 -5.106697386
1 -3 1d5/2 -5.106823116 -5.106697386 | 0 4 0g7/2 -5.106823116 -5.106968137
1 -4 1f7/2 -5.107132424 -5.106968137 | 0 5 0h9/2 -5.107132424 -5.107315951
2 -1 2S1/2 -5.11182877 -5.111781234 | 1 2 1d3/2 -5.11182877 -5.111895309
2 -2 2P3/2 -5.111980842 -5.111895309 | 1 3 1f5/2 -5.111980842 -5.112085355
2 -3 2d5/2 -5.112208832 -5.112085355 | 1 4 1g7/2 -5.112208832 -5.112351252
2 -4 2f7/2 -5.112512595 -5.112351252 | 1 5 1h9/2 -5.112512595 -5.112692834
3 -1 3S1/2 -5.11708862 -5.117041929 | 2 2 2d3/2 -5.11708862 -5.117153977
3 -2 3P3/2 -5.11723799 -5.117153977 | 2 3 2f5/2 -5.11723799 -5.117340646
3 -3 3d5/2 -5.117461929 -5.117340646 | 2 4 2g7/2 -5.117461929 -5.117601819
3 -4 3f7/2 -5.117760296 -5.117601819 | 2 5 2h9/2 -5.117760296 -5.117937335
"""

_T4 = """
0 -2 0P3/2 4.904873061 4.904823288 | 0 1 0P1/2 4.904873061 4.904942731
0 -3 0d5/2 4.905032288 4.904942731 | 0 2 0d3/2 4.905032288 4.905141716
0 -4 0f7/2 4.905270998 4.905141716 | 0 3 0f5/2 4.905270998 4.905420113
0 -5 0g9/2 4.905589037 4.905420113 | 0 4 0g7/2 4.905589037 4.905777742
1 -2 1P3/2 4.910372527 4.910323664 | 1 1 1P1/2 4.910372527 4.910440925
1 -3 1d5/2 4.910528846 4.910440925 | 1 2 1d3/2 4.910528846 4.910636276
1 -4 1f7/2 4.910763198 4.910636276 | 1 3 1f5/2 4.910763198 4.910909592
1 -5 1g9/2 4.911075433 4.910909592 | 1 4 1g7/2 4.911075433 4.911260694
2 -2 2P3/2 4.915734463 4.915686483 | 2 1 2P1/2 4.915734463 4.915801623
2 -3 2d5/2 4.915887953 4.915801623 | 2 2 2d3/2 4.915887953 4.91599344
2 -4 2f7/2 4.916118066 4.91599344 | 2 3 2f5/2 4.916118066 4.916261812
2 -5 2g9/2 4.916424654 4.916261812 | 2 4 2g7/2 4.916424654 4.916606567
"""


def _parse(block):
    rows = []
    for line in block.strip().splitlines():
        left, right = line.split("|")
        pair = []
        for half in (left, right):
            n, kappa, label, e0, e5 = half.split()
            pair.append((int(n), int(kappa), label, float(e0), float(e5)))
        rows.append(tuple(pair))
    return rows


TABLES = {1: _parse(_T1), 2: _parse(_T2), 3: _parse(_T3), 4: _parse(_T4)}


def reference_energies(table: int) -> dict[tuple[int, int, float], float]:
    """{(n, kappa, H): E} for every printed entry of ``table``."""
    out = {}
    for pair in TABLES[table]:
        for n, kappa, _, e0, e5 in pair:
            out[(n, kappa, 0.0)] = e0
            out[(n, kappa, 0.5)] = e5
    return out


def reference_labels(table: int) -> dict[tuple[int, int], str]:
    return {(n, kappa): label for pair in TABLES[table] for n, kappa, label, _, _ in pair}
