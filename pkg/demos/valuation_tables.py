"""Valuation tables of the logarithmic matrices H_(v,n)(eps_n).

Walks a small (p, a_v, n) grid, prints the ord_p of each first-row entry next
to the parity-split closed form, and shows the resulting sharp/flat signature.
"""

from iwagrowth import (
    LocalCurveData,
    signature,
    valuation_matrix,
    valuation_matrix_closed_form,
)


def main():
    grid = [(3, 0, 4), (3, 3, 4), (5, 0, 3), (7, 0, 2)]
    for p, a_v, n_max in grid:
        data = LocalCurveData(p, a_v)
        print(f"\np = {p}, a_v = {a_v} (r_v = {data.r_v}):")
        for n in range(1, n_max + 1):
            vm = valuation_matrix(data, n)
            cf = valuation_matrix_closed_form(data, n)
            agree = "ok" if vm.entries == cf.entries else "MISMATCH"
            print(
                f"  n={n}: ord(H_sharp) = {vm[0, 0]}, ord(H_flat) = {vm[0, 1]}"
                f"  -> signature {signature(data, n)}  [{agree}]"
            )


if __name__ == "__main__":
    main()
