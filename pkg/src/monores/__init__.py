"""Exact monomial-ideal calculus: symbolic powers, decompositions,
containment certificates and resurgence bounds."""

__version__ = "0.1.0"

from .decomposition import (IrreducibleComponent, PrimeSupport, associated_primes,
                            irreducible_decomposition, maximal_associated_primes,
                            primary_decomposition)
from .errors import (CertificateError, ExponentOverflowError, ImproperIdealError,
                     ParseError, RingMismatchError)
from .families import (disjoint_sum, family_F, fd_membership_oracle,
                       fd_symbolic_closed_form, iterated_sum, pm_ideal, star_ideal)
from .ideal import (MonomialIdeal, add, colon, colon_ideal, contains_ideal,
                    contains_monomial, equals, intersect, minimalize, mul, power,
                    radical, saturate)
from .monomial import Monomial, RingContext
from .parser import Session, parse_ideal, parse_monomial, parse_session
from .resurgence import (BoundReport, ContainmentCertificate, ScanReport,
                         check_containment, evaluate_max_sup, iterated_sum_bound,
                         product_witness, res_set_11, rho_a_star_configuration,
                         rho_a_sum_reference, scan, sharp_sum_bound)
from .serialize import emit_json, emit_text, load_json
from .symbolic import (BlockPartition, detect_blocks, symbolic_power,
                       symbolic_power_blockwise)
from .verify import verify_paper
