from .transversal import min_double_transversal, double_transversal_search
from .partition_search import heterochromatic_number_exact, max_rainbow_free_partition
