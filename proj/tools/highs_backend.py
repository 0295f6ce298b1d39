#!/usr/bin/env python3
"""External backend for `sfc-placer solve --backend external:tools/highs_backend.py`.

Reads an LP file, solves it with HiGHS and writes the solution exchange file.
"""
import os
import sys

import highspy


def main() -> int:
    if len(sys.argv) != 3:
        print("usage: highs_backend.py MODEL.lp SOLUTION.txt", file=sys.stderr)
        return 2
    lp_path, sol_path = sys.argv[1], sys.argv[2]
    h = highspy.Highs()
    h.setOptionValue("output_flag", False)
    h.setOptionValue("mip_rel_gap", 0.0)
    h.setOptionValue("mip_abs_gap", 0.0)
    limit = os.environ.get("SFC_PLACER_TIME_LIMIT_MS")
    if limit:
        h.setOptionValue("time_limit", float(limit) / 1000.0)
    if h.readModel(lp_path) != highspy.HighsStatus.kOk:
        print(f"cannot read {lp_path}", file=sys.stderr)
        return 1
    h.run()
    status = h.getModelStatus()
    with open(sol_path, "w") as out:
        if status == highspy.HighsModelStatus.kInfeasible:
            out.write("infeasible\n")
            return 0
        info = h.getInfo()
        if info.primal_solution_status == 0:
            out.write("infeasible\n" if status != highspy.HighsModelStatus.kTimeLimit else "")
            return 0
        lp = h.getLp()
        values = h.getSolution().col_value
        out.write(f"=obj= {info.objective_function_value!r}\n")
        for name, value in zip(lp.col_names_, values):
            if abs(value) > 1e-9:
                out.write(f"{name} {value!r}\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
