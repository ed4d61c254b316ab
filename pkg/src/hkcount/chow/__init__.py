from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .fano import *  # noqa: F401,F403
from .fano import __all__ as _fano_all
from .schubert import lr_coefficients, lr_product, partitions_in_box, pieri

__all__ = list(_core_all) + list(_fano_all) + ["lr_coefficients", "lr_product", "partitions_in_box", "pieri"]
