"""Exact computer algebra for logarithmic flat connections.

Everything is computed over the rationals (or cyclotomic extensions of
them) with fractions.Fraction; there is no floating point anywhere.

Modules
-------
multipoly, univariate, matrices, cyclotomic
    Exact polynomial and linear algebra: graded-lex multivariate
    polynomials, primitive-PRS gcd, fraction-free determinants, and
    arithmetic in cyclotomic quotient rings.
saito
    Logarithmic vector fields, Saito's freeness criterion, weighted
    homogeneity, flatness of connection matrices in a frame of fields,
    residues.
jordan
    Jordan-Chevalley decomposition, quasi-unipotent weight data, the
    spectral central logarithm with verified projector identities.
filtrations
    Decreasing Z-filtrations, simultaneous splitting with adapted-basis
    witnesses or NotSplittable certificates, toric extendability.
laurent, bilaurent, birkhoff
    Laurent matrix algebra, Birkhoff factorization, splitting types on the
    projective line with a section-counting oracle, and equivariant
    splitting on weighted-circle quotients.
extend
    Gluing chart-wise logarithmic connections on the punctured plane into
    global polynomial connections, plus a corpus generator.
castling
    Castling transforms of prehomogeneous descriptors, minor-product
    divisors, weight rescaling, and the residual special-linear
    extendability criterion.
serialize, cli
    Shared JSON formats and the `logflat` command-line tool.
"""

__version__ = "0.1.0"
