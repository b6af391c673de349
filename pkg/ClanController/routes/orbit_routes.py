from flask import current_app
from flask_restx import Namespace, Resource, fields, reqparse

from ClanController.models.orbit_monoid import closed_clans, closure_order, orbit_monoid
from ClanController.models.pair_model import build_pair_model
from ClanController.utils.dot import as_dot
from CorrespondenceController.models.correspondence import boxed_and_shadow
from RootDatumController.models.root_datum import resolve_root_token
from Service.utils.parsing import parse_ordering, parse_pair

api = Namespace('orbits', description='K-orbits on the flag variety, labelled by clans')

orbit_model = api.model('Orbit', {
    'clan': fields.String(description='Clan of the orbit'),
    'length': fields.Integer(description='Distance from the closed orbits in the weak order'),
    'dimension': fields.Integer(description='Orbit dimension'),
    'closed': fields.Boolean(description='True for closed orbits'),
    'open': fields.Boolean(description='True for the dense orbit'),
})

orbit_list_model = api.model('OrbitList', {
    'pair': fields.String(description='Symmetric pair'),
    'count': fields.Integer(description='Number of orbits'),
    'orbits': fields.List(fields.Nested(orbit_model)),
})

saturation_model = api.model('Saturation', {
    'clan': fields.String(description='Starting orbit'),
    'root': fields.Integer(description='Simple root index'),
    'saturation': fields.List(fields.String, description='Orbits meeting P_s Q'),
    'open': fields.String(description='Dense orbit m(s)Q'),
    'rootType': fields.String(description='Type of the simple root relative to the orbit'),
})

pair_parser = reqparse.RequestParser()
pair_parser.add_argument('pair', type=str, location='args', required=True, help='Symmetric pair such as A:2,2 or C:2')
pair_parser.add_argument('seed', type=int, location='args', help='Seed for generic pencil samples')

graph_parser = pair_parser.copy()
graph_parser.add_argument('ordering', type=str, location='args', default='', help='Ordering whose Q_S are boxed')

saturation_parser = pair_parser.copy()
saturation_parser.add_argument('clan', type=str, location='args', required=True, help='Clan such as +-+-')
saturation_parser.add_argument('root', type=str, location='args', required=True, help='Simple root index or Greek name')


def _model_and_seed(args):
    settings = current_app.config['ORBITS_SETTINGS']
    seed = args['seed'] if args.get('seed') is not None else settings.seed
    return build_pair_model(parse_pair(args['pair'], settings)), seed


@api.route('')
class OrbitList(Resource):
    @api.expect(pair_parser)
    @api.marshal_with(orbit_list_model)
    @api.doc(responses={
        200: 'Orbits listed',
        400: 'Invalid or unsupported pair'
    })
    def get(self):
        """Every orbit with its length and dimension"""
        args = pair_parser.parse_args()
        model, seed = _model_and_seed(args)
        graph = closure_order(model, seed)
        closed = set(closed_clans(model, seed))
        top = max(graph.nodes, key=lambda node: node[1])[0]
        orbits = [
            {'clan': str(c), 'length': l, 'dimension': d, 'closed': c in closed, 'open': c == top}
            for c, l, d in graph.nodes
        ]
        return {'pair': str(model.kind), 'count': len(orbits), 'orbits': orbits}, 200


@api.route('/graph')
class OrbitGraphResource(Resource):
    @api.expect(graph_parser)
    @api.doc(responses={
        200: 'Closure order computed',
        400: 'Invalid pair or ordering'
    })
    def get(self):
        """Weak edges, dashed covering relations and closure pairs, with DOT text"""
        args = graph_parser.parse_args()
        model, seed = _model_and_seed(args)
        ordering = parse_ordering(args['ordering'], model.kind.cartan_type, model.rank) if args['ordering'] else None
        graph = closure_order(model, seed)
        boxed, shadow = boxed_and_shadow(model, ordering, seed)
        body = graph.to_dict()
        body.update({
            'pair': str(model.kind),
            'boxed': [str(c) for c in boxed],
            'shadow': [str(c) for c in shadow],
            'dot': as_dot(graph, model.kind, boxed, shadow),
        })
        return body, 200


@api.route('/saturation')
class SaturationResource(Resource):
    @api.expect(saturation_parser)
    @api.marshal_with(saturation_model)
    @api.doc(responses={
        200: 'Saturation computed',
        400: 'Invalid pair, clan or root'
    })
    def get(self):
        """The orbits meeting P_s Q and the type of s at Q"""
        args = saturation_parser.parse_args()
        model, seed = _model_and_seed(args)
        s = resolve_root_token(model.kind.cartan_type, model.rank, args['root'])
        engine = orbit_monoid(model, seed)
        clan = args['clan']
        return {
            'clan': str(engine.pencil(clan, s).clan_at((1, 0))),
            'root': s,
            'saturation': sorted(str(c) for c in engine.saturation(clan, s)),
            'open': str(engine.m_action(clan, s)),
            'rootType': engine.root_type(clan, s),
        }, 200
