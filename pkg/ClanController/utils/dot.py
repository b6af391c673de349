"""Converts orbit graphs into the DOT representation."""
import io

from RootDatumController.models.root_datum import root_name


def _quote(text):
    return '"' + str(text).replace('"', '\\"') + '"'


def as_dot(graph, kind, boxed=(), shadow=()):
    """
    DOT digraph of the closure order: solid labelled weak edges, dashed covering relations

    Args:
        graph (OrbitGraph): Output of closure_order
        kind (PairKind): The pair, used for the title and root names
        boxed (iterable): Clans drawn in a box (the Q_S of the chosen ordering)
        shadow (iterable): Clans drawn in a double box (Q_Pi of other orderings)

    Returns:
        str: DOT text, stable for a given input
    """
    boxed = {str(c) for c in boxed}
    shadow = {str(c) for c in shadow} - boxed
    output = io.StringIO()
    print(f'digraph {_quote(kind)} {{', file=output)
    print('  rankdir=BT;', file=output)
    print('  node [shape=plaintext];', file=output)

    levels = {}
    for clan, length, dim in graph.nodes:
        levels.setdefault(length, []).append(str(clan))
        attributes = [f'label={_quote(clan)}']
        if str(clan) in boxed:
            attributes.append('shape=box')
        elif str(clan) in shadow:
            attributes.append('shape=box, peripheries=2')
        print(f'  {_quote(clan)} [{", ".join(attributes)}];', file=output)
    for length in sorted(levels):
        names = '; '.join(_quote(name) for name in levels[length])
        print(f'  {{rank=same; {names};}}', file=output)

    for source, s, target in graph.weak_edges:
        label = root_name(kind.cartan_type, kind.rank, s)
        print(f'  {_quote(source)} -> {_quote(target)} [label={_quote(label)}];', file=output)
    for source, target in graph.dashed_edges:
        print(f'  {_quote(source)} -> {_quote(target)} [style=dashed];', file=output)
    print('}', file=output)
    return output.getvalue()
