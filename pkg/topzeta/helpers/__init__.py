from .progress import *
from .records import *
from .timer import *
