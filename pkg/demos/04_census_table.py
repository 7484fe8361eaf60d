"""The invariant table up to seven crossings, with searched s/w connections."""
import sys

from shadowkit.census import connections_dot, records_csv, tabulate

table = tabulate(7, connect_budget=2)
sys.stdout.write(records_csv(table.records))
print(f"\n{len(table.connections)} connections found ({table.note})")
if "--dot" in sys.argv:
    print(connections_dot(table))
