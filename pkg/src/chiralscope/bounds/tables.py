"""Row data for the involution-count inequalities, one entry per table row.

Every formula is a sympy expression string in the symbols ``q``, ``n``, ``m``
and ``d``; see :mod:`chiralscope.bounds` for the helper functions. A row
applies when every key of its condition matches the spec:

* ``eps``: +1 or -1
* ``n``/``m``: "even" or "odd" parity of the parameter, or an int
* ``q``: "even"/"odd" parity, or an int
* ``q_min``/``m_min``: lower bounds

The first matching row wins, so special values come before generic rows.
"""

# exponents of the involution lower bound, and the leading fraction
LOWER_EXPONENT = {
    "E8": ("128", 2), "E7": ("70", 4), "E6": ("40", 2), "F4": ("28", 2),
    "G2": ("8", 2), "2F4": ("14", 2), "2G2": ("4", 2), "2B2": ("3", 2),
    "3D4": ("16", 2),
    "L": ("floor(n**2/2)", 4), "PSp": ("m**2+m", 4), "POmega_odd": ("m**2+m", 4),
    "POmega_even": ("m**2-1", 4),
}

# (N + r) for the upper bound on i_2(Aut G); twisted Suzuki/Ree types halve it
UPPER_EXPONENT = {
    "E8": "128", "E7": "70", "E6": "42", "F4": "28", "G2": "8", "3D4": "16",
    "2F4": "14", "2G2": "4", "2B2": "3",
    "L": "(n**2+n-2)/2", "PSp": "m**2+m", "POmega_odd": "m**2+m",
    "POmega_even": "m**2",
}

EXCEPTIONAL = ("E8", "E7", "E6", "F4", "G2", "3D4", "2F4", "2G2", "2B2")
CLASSICAL = ("L", "PSp", "POmega_odd", "POmega_even")

# d = index of the simple group in the adjoint fixed-point group
INDEX = [
    ("E7", {}, "gcd(2, q-1)"),
    ("E6", {}, "gcd(3, q-eps)"),
    ("L", {}, "gcd(n, q-eps)"),
    ("PSp", {}, "gcd(2, q-1)"),
    ("POmega_odd", {}, "gcd(2, q-1)"),
    ("POmega_even", {}, "gcd(2, q-1)"),
    (None, {}, "1"),
]

# |<x>|, the cyclic maximal torus
TORUS = [
    ("E8", {}, "Phi(30)"),
    ("E7", {"q": 2}, "129"),
    ("E7", {}, "Phi(18)*Phi(2)/d"),
    ("E6", {"eps": 1}, "Phi(9)/d"),
    ("E6", {"eps": -1}, "Phi(18)/d"),
    ("F4", {"q": 2}, "17"),
    ("F4", {}, "Phi(12)"),
    ("G2", {"q": 3}, "13"),
    ("G2", {}, "Phi(6)"),
    ("3D4", {}, "Phi(12)"),
    ("2F4", {}, "q**2 + sqrt(2*q**3) + q + sqrt(2*q) + 1"),
    ("2G2", {}, "q + sqrt(3*q) + 1"),
    ("2B2", {}, "q + sqrt(2*q) + 1"),
    ("L", {"eps": 1}, "(q**n-1)/((q-1)*d)"),
    ("L", {"eps": -1, "n": "odd"}, "(q**n+1)/((q+1)*d)"),
    ("L", {"eps": -1, "n": "even"}, "(q**(n-1)+1)/d"),
    ("PSp", {}, "(q**m+1)/d"),
    ("POmega_odd", {}, "(q**m+1)/d"),
    ("POmega_even", {"eps": 1, "m": "odd"}, "(q**(m-1)+1)*(q+1)/d"),
    ("POmega_even", {"eps": 1, "m": "even"}, "(q**(m-1)+1)/d"),
    ("POmega_even", {"eps": -1}, "(q**m+1)/d"),
]

# upper bound for i_2(C_G(t0))
CENTRALIZER = [
    ("E8", {}, "2*q**84*(q**20+q**19)"),
    ("E7", {}, "2*q**42*(q**12+q**11)"),
    ("E6", {}, "2*q**15*(q**12+q**11)"),
    ("F4", {}, "q**22"),
    ("G2", {"q_min": 5}, "q**5"),
    ("3D4", {}, "q**11"),
    ("2F4", {"q_min": 8}, "q**11"),
    ("2G2", {"q_min": 27}, "2*q**2"),
    ("2B2", {}, "q-1"),
    ("L", {"n": "even"}, "q**(n-1)*I2Sp(n-2, q)"),
    ("L", {"n": "odd"}, "I2O(n, q)"),
    ("PSp", {"m": "even"}, "q**((m**2+3*m-2)/2)*I2Sp(m-2, q)"),
    ("PSp", {"m": "odd"}, "q**((m**2+m)/2)*I2Sp(m-1, q)"),
    # the m >= 6 row also serves m = 4, which is re-checked with the sharper bounds
    ("POmega_even", {"m": "even"}, "q**((m**2+m-2)/2)*I2Sp(m-2, q)"),
    ("POmega_even", {"m": "odd"}, "q**((m**2-m)/2)*I2Sp(m-1, q)"),
    ("POmega_odd", {}, "I2Prod(I2O(m, q), I2O(m+1, q))"),
]

# upper bound for the sum of i_2(M) over the maximal overgroups M of <x>
OVERGROUPS = [
    ("E8", {}, "0"),
    ("E7", {}, "2*(q+1)*(q**42+q**41)"),
    ("E6", {}, "2*(q**15+q**12)"),
    ("F4", {}, "2*(q**20+q**19)"),
    ("G2", {"q_min": 5}, "4*(q**5+q**4)"),
    ("3D4", {}, "0"),
    ("2F4", {}, "0"),
    ("2G2", {}, "0"),
    ("2B2", {}, "0"),
    ("L", {"n": "even"}, "2*(q+1)**2*q**((n**2-n-4)/2)"),
    ("L", {"n": "odd"}, "CeilPow(2*NPrimes(n)*(q**3+1), q, (n**2+3*n)/6)"),
    ("PSp", {"m": "even"}, "I2O(2*m, q) + NPrimes(m)*I2Sp(m, q**2)"),
    ("PSp", {"m": "odd"},
     "I2O(2*m, q) + NPrimes(m)*I2Sp(2*m/LargestPrime(m), q**LargestPrime(m))"),
    # m = 4 adds the d classes of irreducible Omega_7(q)
    ("POmega_even", {"m": 4},
     "2*(q+1)**2*q**((m-1)**2-1) + 2*(q+1)**2*q**((m**2-m+4)/2) + d*I2O(7, q)"),
    ("POmega_even", {}, "2*(q+1)**2*q**((m-1)**2-1) + 2*(q+1)**2*q**((m**2-m+4)/2)"),
    ("POmega_odd", {}, "I2O(2*m, q)"),
]

# exact values replacing the lower bound
EXACT_INVOLUTIONS = [
    ("2B2", {}, "(q-1)*(q**2+1)"),
]

# sharper bounds for the first classical exception list: (i2 lower, centralizer)
IMPROVED = [
    ("L", {"n": 4}, "q**8/2", "2*q**4"),
    ("PSp", {"m": 2}, "q**5*(q-1)/2", "2*q**3"),
    ("POmega_even", {"m": 4, "q": "even"}, "q**16/2", "q**11"),
    ("POmega_even", {"m": 4, "q": "odd"}, "q**16/8", "4*q**8"),
]

# groups settled by direct search; eps None means both signs
EXCLUDED_SEARCH = [
    ("L", 4, None, 2), ("L", 4, None, 3), ("L", 4, None, 4),
    ("L", 5, None, 2), ("L", 6, None, 2),
    ("PSp", 2, None, 2), ("PSp", 2, None, 3), ("PSp", 2, None, 4),
    ("PSp", 3, None, 2), ("PSp", 3, None, 3), ("PSp", 4, None, 2),
    ("POmega_odd", 3, None, 3),
    ("POmega_even", 4, None, 2), ("POmega_even", 4, 1, 3),
    ("POmega_even", 5, None, 2),
]

# possible failures of the generic check: q None means every q
EXCEPTION_LIST_1 = [("L", 4, None, None), ("PSp", 2, None, None),
                    ("POmega_even", 4, None, None)]
EXCEPTION_LIST_2 = [
    ("L", 5, None, 3), ("L", 6, None, 3), ("L", 8, None, 2),
    ("PSp", 3, None, 4), ("PSp", 4, None, 3), ("PSp", 4, None, 4),
    ("POmega_even", 6, None, 2),
]

# special exceptional groups whose constants come from character tables
EXTERNAL_CONSTANT = [("G2", 3), ("G2", 4), ("2F4", 2)]

# quoted constants for the sporadic arguments; value None = not printed
SPORADIC_FACTS = [
    {"id": "J4", "count": 29, "centralizer_i2": 280831,
     "target": "i2(J4)", "value": 51747149311},
    {"id": "Ly", "count": 37, "centralizer_i2": 34650,
     "target": "i2(Ly)", "value": None},
    {"id": "Fi24'", "count": 29, "centralizer_i2": 5741695,
     "target": "i2(Fi24')", "value": None},
]
