from flask_restx import Namespace, Resource, fields, reqparse

from RootDatumController.models.root_datum import build_root_datum, grading_dimension
from Service.utils.parsing import parse_kind

api = Namespace('root-data', description='Root data, Cartan matrices and the rho-check grading')

root_datum_model = api.model('RootDatum', {
    'kind': fields.String(description='Group kind, e.g. SL:4'),
    'cartanType': fields.String(description='Dynkin type'),
    'latticeRank': fields.Integer(description='Rank of the character lattice'),
    'simpleRoots': fields.List(fields.List(fields.Integer), description='Simple roots in X*(T)'),
    'simpleCoroots': fields.List(fields.List(fields.Integer), description='Simple coroots in X_*(T)'),
    'cartanMatrix': fields.List(fields.List(fields.Integer), description='A[i][j] = <alpha_i, alpha_j^vee>'),
    'positiveRoots': fields.List(fields.List(fields.Integer), description='Positive roots in X*(T)'),
    'rhoCheck': fields.List(fields.String, description='Half-sum of positive coroots'),
})

grading_model = api.model('Grading', {
    'kind': fields.String(description='Group kind'),
    'k': fields.Integer(description='Degree'),
    'dimension': fields.Integer(description='dim g_k'),
})

kind_parser = reqparse.RequestParser()
kind_parser.add_argument('kind', type=str, location='args', required=True, help='Group kind such as GL:4, SL:4, Sp:2')

grading_parser = kind_parser.copy()
grading_parser.add_argument('k', type=int, location='args', required=True, help='Degree of the graded piece')


@api.route('')
class RootDatumResource(Resource):
    @api.expect(kind_parser)
    @api.marshal_with(root_datum_model)
    @api.doc(responses={
        200: 'Root datum computed',
        400: 'Invalid or unsupported kind'
    })
    def get(self):
        """Simple roots, coroots, Cartan matrix, positive roots and rho-check of a group"""
        args = kind_parser.parse_args()
        datum = build_root_datum(parse_kind(args['kind']))
        return {
            'kind': str(datum.kind),
            'cartanType': datum.kind.cartan_type,
            'latticeRank': datum.lattice_rank,
            'simpleRoots': [list(r) for r in datum.simple_roots],
            'simpleCoroots': [list(c) for c in datum.simple_coroots],
            'cartanMatrix': [list(row) for row in datum.cartan_matrix],
            'positiveRoots': [list(r) for r in datum.positive_roots],
            'rhoCheck': [str(x) for x in datum.rho_check],
        }, 200


@api.route('/grading')
class GradingResource(Resource):
    @api.expect(grading_parser)
    @api.marshal_with(grading_model)
    @api.doc(responses={
        200: 'Dimension computed',
        400: 'Invalid or unsupported kind'
    })
    def get(self):
        """Dimension of the graded piece g_k"""
        args = grading_parser.parse_args()
        datum = build_root_datum(parse_kind(args['kind']))
        return {'kind': str(datum.kind), 'k': args['k'], 'dimension': grading_dimension(datum, args['k'])}, 200
