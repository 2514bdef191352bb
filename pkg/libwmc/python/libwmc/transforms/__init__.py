from libwmc.transforms.dichotomy import (
        Classification, build_dichotomy_fbdd, classify_dichotomy,
        padding_assignment, reduce_padded_diagram)
from libwmc.transforms.dldd_to_fbdd import dldd_to_fbdd
from libwmc.transforms.family_obdd import FamilyObddBuilder, build_family_obdd
from libwmc.transforms.multioutput import fbdd_to_multioutput
from libwmc.transforms.sanity import check_lower_bound
from libwmc.transforms.transversals import (
        TransversalSet, find_transversals, hk_units)
from libwmc.transforms.unit_rule import follows_unit_rule, to_unit_rule


__all__ = [
        'Classification', 'FamilyObddBuilder', 'TransversalSet',
        'build_dichotomy_fbdd', 'build_family_obdd', 'check_lower_bound',
        'classify_dichotomy', 'dldd_to_fbdd', 'fbdd_to_multioutput',
        'find_transversals', 'follows_unit_rule', 'hk_units',
        'padding_assignment', 'reduce_padded_diagram', 'to_unit_rule']
