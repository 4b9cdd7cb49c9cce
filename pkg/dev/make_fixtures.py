"""Regenerate src/lvmb/data/ex8_*.json from the example tables (run once)."""
from lvmb.exactnum.gaussian import parse_gaussian as g
from lvmb.systems import Configuration, FundamentalSet
from lvmb import documents

def conf(rows):
    return Configuration.from_matrix([[g(x) for x in r.split()] for r in rows])

EX = {
 "ex8_1": (2, [(1,2,3,4,6),(1,2,3,5,6),(1,2,3,4,7),(1,2,3,5,7)],
   ["0 -1 0 1 1 -1-i -1-i",
    "-i 0 -1 i i 1 1"],
   [[0,-2],[1,0]]),
 "ex8_2": (2, [(1,2,3,4,5),(1,2,3,4,6),(1,2,3,5,7),(1,2,3,4,8),(1,2,3,6,7),(1,2,3,7,8)],
   ["-2i 1+i -2-i -2+i -1+i -1+i -1+i i",
    "-i -2 -1-2i -2-2i 1-2i -2-i -2-2i 1+i"],
   [[-1,0],[2,-1]]),
 "ex8_3": (3, [(1,2,3,4,5,6,7),(1,2,3,4,5,6,9),(1,2,3,4,5,8,9),(1,2,3,4,6,7,8),(1,2,3,4,7,8,9)],
   ["1+i 1 i 1-2i -1+i 0 -2i -2-i -2i",
    "1-2i 1+i 1+i 1-2i -2+i -2i -1 -1-i -1-i",
    "0 1-2i -1+i -1-i 1 1 -1-2i -2-2i i"],
   [[-2,0,1],[0,0,-2],[1,-1,-2]]),
 "ex8_4": (3, [(1,2,3,4,5,6,7),(1,2,3,4,6,7,8),(1,2,3,4,5,7,9),(1,2,3,4,7,8,9),
               (1,2,3,4,5,6,10),(1,2,3,4,6,8,10),(1,2,3,4,5,9,10),(1,2,3,4,8,9,10)],
   ["-1+2i -2-i 1 2 -2 -2-2i -i 0 -1-2i 2-2i",
    "2+2i 2 2-2i 1 -1-2i -2 -2 -2-2i -2+i -2",
    "1 1-2i 2-i 2-2i 1 1-i -1+i -1+2i 2 -2-2i"],
   [[0,1,0],[-2,-1,0],[-2,-2,1]]),
 "ex8_5": (4, [(1,2,3,4,5,6,7,8,9),(1,2,3,4,5,7,8,9,10),(1,2,3,4,5,6,8,9,11),(1,2,3,4,5,8,9,10,11)],
   ["-1-i -1 -2 -2-2i -2+i -i -1-i -2-2i -2+i 1 1",
    "-1-2i 1-i -i -2-2i -2 i -2i 1+i -1-i 1-2i -2i",
    "1 i -i 0 -1+i -2i -1-i 1-i -2 -1 1-i",
    "-2-i 1-i -i 0 -1-i -2i -2i -2-2i -1-2i -i -2i"],
   [[-2,-2,1,0],[-1,1,1,0],[0,0,0,-1],[-2,1,1,1]]),
}

# m = 1 fixtures: (parts, row, basis, note)
M1 = {
 "hopf_m1": ([(1,2,3),(1,2,4),(1,2,5)], "0 1 i 2i 1+i", [[1]], "k=2: 1 and 2 indispensable"),
 "k1_m1": ([(1,2,4),(1,2,5),(1,3,4),(1,3,5)], "1+i -2-i 0 1-i 1", None, "k=1: only 1 indispensable"),
 "pentagon_m1": ([(1,2,4),(2,3,5),(1,3,4),(2,4,5),(1,3,5)], "2i 2 1-2i -1-2i -2", None, "k=0: triangles (i,i+1,i+3)"),
 "triple_empty_m1": ([(1,2,3),(1,2,4),(1,3,6),(1,4,6),(2,3,5),(2,4,5),(3,5,6),(4,5,6)],
                     "-3+3i -1-2i -2+2i -1+2i -2-2i -i", None,
                     "good, but (123), (136), (245) have no common interior point"),
 "singleton_m1": ([(1,2,3)], "0 1 i 2i 1+i", None, "one part: PEUR fails"),
}

if __name__ == "__main__":
    import sys
    for name, (m, parts, rows, basis) in EX.items():
        lam = conf(rows)
        eps = FundamentalSet.of(m, lam.n, parts)
        doc = documents.make(eps, lam, basis, name=name)
        documents.save(doc, f"src/lvmb/data/{name}.json")
        print(name, m, lam.n)
    for name, (parts, row, basis, note) in M1.items():
        lam = conf([row])
        eps = FundamentalSet.of(1, lam.n, parts)
        documents.save(documents.make(eps, lam, basis, name=name, note=note), f"src/lvmb/data/{name}.json")
        print(name, 1, lam.n)
