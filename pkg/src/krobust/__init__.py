"""k-robust solutions of MIS, MDS and maximal matching under connectivity-preserving edge removal."""
