from libwmc.lineage.combinator import (
        CombinatorFn, f_w, project_g_at_ones)
from libwmc.lineage.composite import (
        CompositeLineage, flatten, restrict_composite, single)
from libwmc.lineage.grounding import (
        ground_b_family, ground_dichotomy_query, ground_h0, ground_hk_family,
        ground_query, grounded_variables)
from libwmc.lineage.query_spec import (
        QuerySpec, load_query_spec, parse_query_spec)


__all__ = [
        'CombinatorFn', 'CompositeLineage', 'QuerySpec', 'f_w', 'flatten',
        'ground_b_family', 'ground_dichotomy_query', 'ground_h0',
        'ground_hk_family', 'ground_query', 'grounded_variables',
        'load_query_spec', 'parse_query_spec', 'project_g_at_ones',
        'restrict_composite', 'single']
