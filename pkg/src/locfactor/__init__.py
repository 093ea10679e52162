"""Exact factorization over Z, Z[X], Laurent polynomials and Z[X][Y],
cross-checked through localization descent.

The package is organized bottom-up:

* ``rings``        -- exact arithmetic and the uniform ring contract
* ``basefactor``   -- ground-truth engines (trial division, Kronecker)
* ``localization`` -- prime-generated submonoids, fractions, transfer algorithms
* ``descent``      -- primality certificates and the descent factorizer
* ``routes``       -- Laurent / fraction-field / bivariate routes and oracles
* ``expr``         -- expression parsing and rendering
* ``selftest``     -- seeded randomized property suites
* ``cli``          -- the ``locfactor`` command
"""

from .basefactor import (
    AssociateBijection,
    PrimeFactorization,
    check_factorization_unique,
    content,
    factor_bivariate,
    factor_integer,
    factor_poly_qx,
    factor_poly_zx,
    is_irreducible,
    is_prime,
    kronecker_factor,
    primitive_part,
)
from .descent import (
    BaseEngineOracle,
    DescentResult,
    LocalizationOracle,
    PrimalityCertificate,
    certify_prime,
    descend_factor,
    descend_factor_pou,
    normalize_numerator,
)
from .errors import (
    DescentInconsistencyError,
    DeskScaleError,
    LocFactorError,
    MathDomainError,
    OracleViolationError,
    ParseError,
    PreconditionError,
)
from .expr import parse_expr, render
from .localization import (
    Fraction,
    GeneratedSubmonoid,
    SMember,
    avoids,
    clear_denominator,
    embed,
    find_associate_generator,
    frac_add,
    frac_eq,
    frac_is_unit,
    frac_mul,
    lift_dvd,
    pou_lift_dvd,
    pou_transfer_irreducible,
    pou_transfer_prime_divides,
    split_prime_factors,
    transfer_irreducible,
    transfer_prime_divides,
    witness_multiset,
)
from .rings import (
    FRAC_ZX,
    FXY,
    LT,
    QQ,
    QX,
    ZX,
    ZXY,
    ZZ,
    Laurent,
    Poly,
    RatFunc,
    Ring,
    laurent_to_poly,
    strip_var_power,
)
from .routes import (
    compare_routes,
    factor_iterated,
    factor_laurent,
    factor_zx_via_fraction_field,
    factor_zx_via_laurent,
)
from .selftest import run_selftest

__version__ = "0.1.0"
