"""fermatmoduli — symmetries and fields of moduli of generalized Fermat curves."""
