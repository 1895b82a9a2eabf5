from .jacobi import agm, ellipk_complex, ellipfun, jacobi_sn, jacobi_cn, jacobi_dn  # noqa: F401
from .profile import EllipticProfile, v_profile, discriminant_roots, inverse_sn  # noqa: F401
