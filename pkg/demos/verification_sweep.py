"""Run the whole verification suite over every shape of up to four
points (pass --five to go to five; the larger shapes take a while)."""
import sys

from kzresidue import enumerate_partitions, run_suite

top = 5 if "--five" in sys.argv else 4

for n in range(1, top + 1):
    for lam in enumerate_partitions(n):
        for report in run_suite(lam, 1):
            print(report.one_line())
