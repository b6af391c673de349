from flask_restx import Namespace, Resource, fields, reqparse

from RootDatumController.models.root_datum import build_root_datum
from Service.utils.parsing import parse_kind, parse_subset
from TorusController.models.torus_orbits import (
    SimpleSubset, all_subsets, component_group_AT, subset_label, xi_T,
)

api = Namespace('torus', description='T-orbits on g_-1 and their component groups')

group_row_model = api.model('ComponentGroupRow', {
    'S': fields.List(fields.Integer, description='Simple roots in S'),
    'label': fields.String(description='Subset label'),
    'dimension': fields.Integer(description='dim O_S = |S|'),
    'AT': fields.String(description='A_T(x_S) as a product of cyclic groups'),
    'order': fields.Integer(description='|A_T(x_S)|'),
})

groups_model = api.model('ComponentGroups', {
    'kind': fields.String(description='Group kind'),
    'rows': fields.List(fields.Nested(group_row_model)),
})

parameter_model = api.model('TorusParameter', {
    'subset': fields.List(fields.Integer, description='Support O_S'),
    'character': fields.Integer(description='Character index of A_T(x_S); 0 is trivial'),
})

parameters_model = api.model('TorusParameters', {
    'kind': fields.String(description='Group kind'),
    'count': fields.Integer(description='|Xi(T, g_-1)|'),
    'parameters': fields.List(fields.Nested(parameter_model)),
})

groups_parser = reqparse.RequestParser()
groups_parser.add_argument('kind', type=str, location='args', required=True, help='Group kind such as SL:4')
groups_parser.add_argument('subset', type=str, location='args', default='', help="A single subset ('all', '1,3'); every subset when omitted")

parameters_parser = reqparse.RequestParser()
parameters_parser.add_argument('kind', type=str, location='args', required=True, help='Group kind such as SL:4')


@api.route('/groups')
class ComponentGroupList(Resource):
    @api.expect(groups_parser)
    @api.marshal_with(groups_model)
    @api.doc(responses={
        200: 'Component groups computed',
        400: 'Invalid kind or subset'
    })
    def get(self):
        """A_T(x_S) for every subset S of the simple roots"""
        args = groups_parser.parse_args()
        datum = build_root_datum(parse_kind(args['kind']))
        if args['subset']:
            subsets = [parse_subset(args['subset'], datum.kind.cartan_type, datum.rank)]
        else:
            subsets = all_subsets(datum.rank)
        rows = []
        for members in subsets:
            group = component_group_AT(datum, SimpleSubset.of(members, datum.rank))
            rows.append({
                'S': sorted(members),
                'label': subset_label(members),
                'dimension': len(members),
                'AT': str(group),
                'order': group.order,
            })
        return {'kind': str(datum.kind), 'rows': rows}, 200


@api.route('/parameters')
class TorusParameterList(Resource):
    @api.expect(parameters_parser)
    @api.marshal_with(parameters_model)
    @api.doc(responses={
        200: 'Parameters listed',
        400: 'Invalid kind'
    })
    def get(self):
        """The parameter set Xi(T, g_-1)"""
        args = parameters_parser.parse_args()
        datum = build_root_datum(parse_kind(args['kind']))
        parameters = xi_T(datum)
        return {
            'kind': str(datum.kind),
            'count': len(parameters),
            'parameters': [p.to_dict() for p in parameters],
        }, 200
