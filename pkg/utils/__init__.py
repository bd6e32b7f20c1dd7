from .logger import Logger
from .run_utils import set_seed
from .errors import (
    BPDLError,
    CertificateError,
    FormatError,
    GuardExceeded,
    MalformedJustification,
    ParseError,
    ResourceLimit,
)

__all__ = [
    'Logger',
    'set_seed',
    'BPDLError',
    'CertificateError',
    'FormatError',
    'GuardExceeded',
    'MalformedJustification',
    'ParseError',
    'ResourceLimit',
]
