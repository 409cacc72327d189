#!/usr/bin/env python3
"""Regenerate data/census.json from the LinkInfo tables (database_knotinfo).

This is a one-off construction tool; the build and the tests never run it.
PD codes are copied verbatim from the {0,...,0} orientation record of each
link. Component labels follow the smallest arc label of each component.
Calibrations and ground-truth generators are merged from data/census_meta.json;
the calibrations there are produced by `whitten census calibrate --write`.

    pip install database-knotinfo
    python3 tools/build_census.py > data/census.json
"""
import json
import os
import re
import sys

from database_knotinfo import link_list

HERE = os.path.dirname(os.path.abspath(__file__))
META = os.path.join(HERE, "..", "data", "census_meta.json")


def parse_pd(text):
    return [list(map(int, q)) for q in re.findall(r"\{(\d+), (\d+), (\d+), (\d+)\}", text)]


def components_of(pd):
    # strands continue 0->2 and 1->3 through every crossing
    adj = {}
    for x in pd:
        for s, t in ((0, 2), (1, 3)):
            adj.setdefault(x[s], set()).add(x[t])
            adj.setdefault(x[t], set()).add(x[s])
    seen, comps = set(), []
    for a in sorted(adj):
        if a in seen:
            continue
        stack, comp = [a], []
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            comp.append(v)
            stack.extend(adj[v])
        comps.append(sorted(comp))
    comps.sort(key=min)
    return comps


def main():
    meta = json.load(open(META))
    table = {}
    for rec in link_list(proper_links=True)[1:]:
        name = rec["name"]
        base = name.split("{")[0]
        orient = name[len(base):]
        if orient and set(orient.strip("{}").split(",")) != {"0"}:
            continue
        table[base] = rec

    out = []
    for m in meta["links"]:
        rec = dict(m)
        th = m["thistlethwaite"]
        if th is None:
            rec.setdefault("pd", [])
            rec.setdefault("source", "constructed")
        else:
            src = table["L" + th]
            pd = parse_pd(src["pd_notation_vector"])
            comps = components_of(pd)
            assert len(comps) == m["mu"], (th, comps)
            assert src["rolfsen_name"] == m["rolfsen"], (th, src["rolfsen_name"])
            rec["pd"] = pd
            rec["components"] = {str(a): i + 1 for i, c in enumerate(comps) for a in c}
            rec["alternating"] = src["alternating"] == "Y"
            rec["crossings"] = len(pd)
            rec["source"] = src["name"]
        out.append(rec)

    # one link per line, the layout `whitten census calibrate --write` keeps
    sys.stdout.write('{\n "schema_version": 1,\n "links": [\n')
    sys.stdout.write(",\n".join("  " + json.dumps(r) for r in out))
    sys.stdout.write("\n ]\n}\n")


if __name__ == "__main__":
    main()
