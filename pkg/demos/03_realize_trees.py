"""Every tree with an odd number of edges is the arrangement of a prime shadow."""
from shadowkit import is_prime, non_seifert_resolve, parse_tree, realize_prime, serialize_gauss
from shadowkit.circles import trees_with_edges

for m in (1, 3, 5):
    for code in trees_with_edges(m):
        P = realize_prime(parse_tree(code))
        ok = is_prime(P) and non_seifert_resolve(P).ahu == code
        print(f"{code:16s} n={P.n:2d} {'ok' if ok else 'MISMATCH'}  {serialize_gauss(P)}")
