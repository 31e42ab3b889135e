from .errors import AlgebraError, ParseError
from .scalars import HSeries, to_rational
from .freealg import MultiTensor, parse_word
from .coalgebra import GeneratorMap, Verdict, delta0
from .qlba import Bivector, QlbaData, euclidean, minkowski, pr_qlba
from .traces import CyclicTensor, WordFunctional, z_symbol
from .quant import QhData, EndoMap
