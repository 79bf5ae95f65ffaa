from .apps import *
from .graphs import *
from .families import *
from .mycielskian import *
from .automorphism import *
from .invariants import *
from .twins import *
from .harness import *
