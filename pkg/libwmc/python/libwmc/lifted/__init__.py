from libwmc.lifted.engine import (
        LiftedResult, LiftedTerm, is_safe, lattice_of, lifted_evaluate,
        lifted_wmc)
from libwmc.lifted.lattice import (
        ClauseLattice, build_lattice_and_mobius, grouped_terms,
        inclusion_exclusion_terms, positive_cnf)


__all__ = [
        'ClauseLattice', 'LiftedResult', 'LiftedTerm',
        'build_lattice_and_mobius', 'grouped_terms',
        'inclusion_exclusion_terms', 'is_safe', 'lattice_of',
        'lifted_evaluate', 'lifted_wmc', 'positive_cnf']
