"""Command line front end: orbit listings, closure graphs, verification reports and tables."""
import csv
import functools
import io
import json
import logging
import sys

import click

from ClanController.models.orbit_monoid import closed_clans, closure_order
from ClanController.models.pair_model import build_pair_model
from ClanController.utils.dot import as_dot
from CorrespondenceController.models.correspondence import (
    ak_of_QS, all_orderings, boxed_and_shadow, correspondence_report, phi_surjectivity,
)
from KLVController.models.klv_hecke import (
    compare_with_torus, klv_polynomial, klv_table_rows, restricted_c_matrix_by_subset,
    verify_boxed_klv,
)
from RootDatumController.models.root_datum import build_root_datum, root_name
from Service import CustomJSONEncoder
from Service.utils.errors import (
    EXIT_FAILED, EXIT_OK, EXIT_UNSUPPORTED, USAGE_ERRORS, OrbitToolkitError,
)
from Service.utils.parsing import parse_kind, parse_ordering, parse_pair, parse_subset
from Service.utils.settings import configure_logging, load_settings
from TorusController.models.torus_orbits import SimpleSubset, all_subsets, component_group_AT, subset_label

logger = logging.getLogger(__name__)


def guarded(command):
    """Map toolkit errors to the exit code contract: 2 for usage, 1 for failed checks."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except USAGE_ERRORS as error:
            click.echo(f"error: {error.message}", err=True)
            sys.exit(EXIT_UNSUPPORTED)
        except OrbitToolkitError as error:
            click.echo(f"failed: {error.message}", err=True)
            sys.exit(EXIT_FAILED)
    return wrapper


def emit(text, out=None):
    if out:
        with open(out, 'w', encoding='utf-8') as handle:
            handle.write(text if text.endswith('\n') else text + '\n')
    else:
        click.echo(text.rstrip('\n'))


def as_json(data):
    return json.dumps(data, indent=2, ensure_ascii=False, cls=CustomJSONEncoder)


def as_csv(header, rows):
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def _ordering_text(model, ordering):
    return ','.join(root_name(model.kind.cartan_type, model.rank, s) for s in ordering)


def _orderings(model, ordering, every):
    if every:
        return all_orderings(model.rank)
    return [parse_ordering(ordering, model.kind.cartan_type, model.rank)]


pair_option = click.option('--pair', required=True, help='Symmetric pair: A:p,q or C:n')
kind_option = click.option('--kind', required=True, help='Group kind: GL:n, SL:n, Sp:n, SpinB:n, ...')
ordering_option = click.option('--ordering', default='', help="Ordering of the simple roots, e.g. 2,1,3 or 'β,α'")
every_option = click.option('--all-orderings', 'every', is_flag=True, help='Sweep all orderings')
seed_option = click.option('--seed', type=int, default=None, help='Seed for generic pencil samples')
out_option = click.option('--out', type=click.Path(dir_okay=False), default=None, help='Write to a file')


def format_option(*choices):
    return click.option('--format', 'fmt', type=click.Choice(choices), default=choices[0], show_default=True)


@click.group()
@click.option('--verbose', is_flag=True, help='Log at DEBUG level')
@click.pass_context
def cli(ctx, verbose):
    """Orbits of symmetric subgroups on flag varieties and their torus-side counterparts."""
    settings = load_settings()
    configure_logging('DEBUG' if verbose else settings.log_level)
    ctx.obj = settings


def _model(settings, pair):
    return build_pair_model(parse_pair(pair, settings))


def _seed(settings, seed):
    return settings.seed if seed is None else seed


@cli.command()
@pair_option
@seed_option
@format_option('text', 'json', 'csv')
@out_option
@click.pass_obj
@guarded
def orbits(settings, pair, seed, fmt, out):
    """List every orbit with its length, dimension and closed/open flags."""
    model = _model(settings, pair)
    seed = _seed(settings, seed)
    graph = closure_order(model, seed)
    closed = set(closed_clans(model, seed))
    top = max(graph.nodes, key=lambda node: node[1])[0]
    rows = [(str(c), l, d, c in closed, c == top) for c, l, d in graph.nodes]
    if fmt == 'json':
        text = as_json({
            'pair': str(model.kind),
            'orbits': [
                {'clan': c, 'length': l, 'dimension': d, 'closed': k, 'open': o}
                for c, l, d, k, o in rows
            ],
        })
    elif fmt == 'csv':
        text = as_csv(('clan', 'length', 'dimension', 'closed', 'open'), rows)
    else:
        width = max(len(r[0]) for r in rows)
        lines = [f"{'clan':<{width}}  length  dim  flags"]
        for c, l, d, k, o in rows:
            flags = ' '.join(name for name, on in (('closed', k), ('open', o)) if on)
            lines.append(f"{c:<{width}}  {l:>6}  {d:>3}  {flags}".rstrip())
        text = '\n'.join(lines)
    emit(text, out)


@cli.command()
@pair_option
@ordering_option
@seed_option
@format_option('dot', 'json')
@out_option
@click.pass_obj
@guarded
def graph(settings, pair, ordering, seed, fmt, out):
    """Closure order as DOT: labelled weak edges, dashed covering relations, boxed Q_S."""
    model = _model(settings, pair)
    seed = _seed(settings, seed)
    chosen = parse_ordering(ordering, model.kind.cartan_type, model.rank) if ordering else None
    order = closure_order(model, seed)
    boxed, shadow = boxed_and_shadow(model, chosen, seed)
    if fmt == 'json':
        body = order.to_dict()
        body.update({'pair': str(model.kind), 'boxed': [str(c) for c in boxed], 'shadow': [str(c) for c in shadow]})
        emit(as_json(body), out)
    else:
        emit(as_dot(order, model.kind, boxed, shadow), out)


def _verify_ordering(model, ordering, seed):
    report = correspondence_report(model, ordering, seed)
    checks = {
        'dimension': report['dimensionPassed'],
        'closure': report['closurePassed'],
        'qsConsistent': report['qsConsistent'],
        'qsInjective': report['qsInjective'],
    }
    if model.family == 'A':
        try:
            klv = verify_boxed_klv(model, ordering, seed)
            torus = compare_with_torus(model, ordering, seed)
        except OrbitToolkitError as error:
            if isinstance(error, USAGE_ERRORS):
                raise
            report['klvError'] = error.message
            checks['klv'] = False
        else:
            report['klv'] = klv
            report['torus'] = torus
            checks['klv'] = klv['passed'] == klv['total']
            checks['torus'] = torus['passed'] == torus['total']
    report['checks'] = checks
    report['passed'] = all(checks.values())
    return report


@cli.command()
@pair_option
@ordering_option
@every_option
@seed_option
@format_option('json', 'text')
@out_option
@click.pass_obj
@guarded
def verify(settings, pair, ordering, every, seed, fmt, out):
    """Run the dimension, closure, Q_S and (family A) KLV and torus checks; exit 1 on failure."""
    model = _model(settings, pair)
    seed = _seed(settings, seed)
    reports = []
    for chosen in _orderings(model, ordering, every):
        try:
            reports.append(_verify_ordering(model, chosen, seed))
        except USAGE_ERRORS:
            raise
        except OrbitToolkitError as error:
            reports.append({'ordering': list(chosen), 'passed': False, 'error': error.message})
    passed = all(r['passed'] for r in reports)
    if fmt == 'json':
        text = as_json({'pair': str(model.kind), 'seed': seed, 'passed': passed, 'orderings': reports})
    else:
        lines = []
        for r in reports:
            status = 'PASS' if r['passed'] else 'FAIL'
            name = _ordering_text(model, r['ordering'])
            if 'error' in r:
                lines.append(f"{name}: {status} ({r['error']})")
                continue
            failing = [k for k, ok in r['checks'].items() if not ok]
            suffix = f" ({', '.join(failing)})" if failing else ''
            lines.append(f"{name}: {status}{suffix}")
        lines.append('all checks passed' if passed else 'verification failed')
        text = '\n'.join(lines)
    emit(text, out)
    sys.exit(EXIT_OK if passed else EXIT_FAILED)


@cli.command()
@pair_option
@click.option('--from', 'source', default=None, help='Clan of the smaller orbit')
@click.option('--to', 'target', default=None, help='Clan of the larger orbit')
@ordering_option
@seed_option
@format_option('text', 'json', 'csv')
@out_option
@click.pass_obj
@guarded
def klv(settings, pair, source, target, ordering, seed, fmt, out):
    """KLV polynomials; a single entry with --from/--to, the C matrix on the Q_S with --ordering."""
    model = _model(settings, pair)
    seed = _seed(settings, seed)
    if source and target:
        value = klv_polynomial(model, source, target, seed)
        if fmt == 'json':
            text = as_json({'from': source, 'to': target, 'polynomial': str(value), 'coefficients': value.to_list()})
        elif fmt == 'csv':
            text = as_csv(('from', 'to', 'polynomial'), [(source, target, str(value))])
        else:
            text = str(value)
        emit(text, out)
        return
    if ordering:
        chosen = parse_ordering(ordering, model.kind.cartan_type, model.rank)
        matrix = restricted_c_matrix_by_subset(model, chosen, seed)
        comparison = compare_with_torus(model, chosen, seed)
        if fmt == 'json':
            text = as_json({'matrix': matrix.to_dict(), 'comparison': comparison})
        else:
            rows = [(label,) + tuple(row) for label, row in zip(matrix.labels, matrix.entries)]
            text = as_csv(('S',) + matrix.labels, rows)
            if fmt == 'text':
                text += f"torus comparison: {comparison['passed']}/{comparison['total']} entries equal"
        emit(text, out)
        return
    rows = klv_table_rows(model, seed)
    if fmt == 'json':
        text = as_json([
            {'from': a, 'to': b, 'polynomial': p, 'coefficients': [int(c) for c in k.split()]}
            for a, b, p, k in rows
        ])
    elif fmt == 'csv':
        text = as_csv(('from', 'to', 'polynomial', 'coefficients'), rows)
    else:
        text = '\n'.join(f"P({a}, {b}) = {p}" for a, b, p, _ in rows)
    emit(text, out)


@cli.command()
@kind_option
@click.option('--subset', default=None, help="A single subset: 'all', '1,3', 'β'")
@ordering_option
@format_option('text', 'json', 'csv')
@out_option
@click.pass_obj
@guarded
def atgroups(settings, kind, subset, ordering, fmt, out):
    """Component groups A_T(x_S), with A_K(epsilon(x_S)) for GL and Sp."""
    group_kind = parse_kind(kind)
    datum = build_root_datum(group_kind)
    chosen = parse_ordering(ordering, group_kind.cartan_type, datum.rank)
    if subset is not None:
        subsets = [parse_subset(subset, group_kind.cartan_type, datum.rank)]
    else:
        subsets = all_subsets(datum.rank)
    model = None
    if group_kind.family in ('GL', 'Sp'):
        pair_text = f'A:{(group_kind.n + 1) // 2},{group_kind.n // 2}' if group_kind.family == 'GL' else f'C:{group_kind.n}'
        model = build_pair_model(parse_pair(pair_text))
    rows = []
    for members in subsets:
        at_group = component_group_AT(datum, SimpleSubset(members, chosen))
        ak_group = ak_of_QS(model, chosen, members) if model else None
        rows.append((subset_label(members), len(members), str(at_group), at_group.order,
                     str(ak_group) if ak_group else ''))
    if fmt == 'json':
        text = as_json({
            'kind': str(group_kind),
            'ordering': list(chosen),
            'rows': [{'S': s, 'dimension': d, 'AT': a, 'order': o, 'AK': k or None} for s, d, a, o, k in rows],
        })
    elif fmt == 'csv':
        text = as_csv(('S', 'dimension', 'AT', 'order', 'AK'), rows)
    else:
        lines = [f"{'S':<12} dim  A_T{'':<10} A_K"]
        for s, d, a, o, k in rows:
            lines.append(f"{s:<12} {d:>3}  {a:<13} {k}".rstrip())
        text = '\n'.join(lines)
    emit(text, out)


@cli.command()
@kind_option
@ordering_option
@every_option
@format_option('text', 'json')
@out_option
@click.pass_obj
@guarded
def phi(settings, kind, ordering, every, fmt, out):
    """Whether the parameter map Phi is surjective, with failing subsets."""
    group_kind = parse_kind(kind)
    rank = build_root_datum(group_kind).rank
    if every:
        orderings = all_orderings(rank)
    else:
        orderings = [parse_ordering(ordering, group_kind.cartan_type, rank)]
    verdicts = [(chosen, phi_surjectivity(group_kind, chosen)) for chosen in orderings]
    if fmt == 'json':
        text = as_json([
            dict(ordering=list(chosen), kind=str(group_kind), **verdict.to_dict())
            for chosen, verdict in verdicts
        ])
    else:
        lines = []
        for chosen, verdict in verdicts:
            name = ','.join(root_name(group_kind.cartan_type, rank, s) for s in chosen)
            if verdict.surjective:
                lines.append(f"{group_kind} ordering {name}: surjective")
                continue
            witnesses = '; '.join(
                '{' + ','.join(root_name(group_kind.cartan_type, rank, s) for s in w['S']) + '}'
                + f" A_T={w['AT']}"
                for w in verdict.witnesses
            )
            lines.append(f"{group_kind} ordering {name}: not surjective, witnesses {witnesses}")
        text = '\n'.join(lines)
    emit(text, out)


if __name__ == '__main__':
    cli()
