from flask import current_app
from flask_restx import Namespace, Resource, fields, reqparse

from ClanController.models.pair_model import build_pair_model
from KLVController.models.klv_hecke import klv_polynomial, klv_table_rows
from Service.utils.parsing import parse_pair

api = Namespace('klv', description='Kazhdan-Lusztig-Vogan polynomials for the pairs A(p,q)')

polynomial_model = api.model('KLVPolynomial', {
    'from': fields.String(description='Smaller orbit psi'),
    'to': fields.String(description='Orbit gamma'),
    'polynomial': fields.String(description='P_{psi,gamma}, e.g. 1+q'),
    'coefficients': fields.List(fields.Integer, description='Coefficients by degree'),
})

table_model = api.model('KLVTable', {
    'pair': fields.String(description='Symmetric pair'),
    'rows': fields.List(fields.Nested(polynomial_model)),
})

pair_parser = reqparse.RequestParser()
pair_parser.add_argument('pair', type=str, location='args', required=True, help='Symmetric pair such as A:2,2')
pair_parser.add_argument('seed', type=int, location='args', help='Seed for generic pencil samples')

polynomial_parser = pair_parser.copy()
polynomial_parser.add_argument('from', type=str, location='args', required=True, help='Clan of the smaller orbit')
polynomial_parser.add_argument('to', type=str, location='args', required=True, help='Clan of the larger orbit')


def _model_and_seed(args):
    settings = current_app.config['ORBITS_SETTINGS']
    seed = args['seed'] if args.get('seed') is not None else settings.seed
    return build_pair_model(parse_pair(args['pair'], settings)), seed


@api.route('/polynomial')
class KLVPolynomialResource(Resource):
    @api.expect(polynomial_parser)
    @api.marshal_with(polynomial_model)
    @api.doc(responses={
        200: 'Polynomial computed',
        400: 'Invalid pair or clan',
        501: 'Not implemented for family C'
    })
    def get(self):
        """A single KLV polynomial P_{from,to}"""
        args = polynomial_parser.parse_args()
        model, seed = _model_and_seed(args)
        value = klv_polynomial(model, args['from'], args['to'], seed)
        return {
            'from': args['from'],
            'to': args['to'],
            'polynomial': str(value),
            'coefficients': value.to_list(),
        }, 200


@api.route('/table')
class KLVTableResource(Resource):
    @api.expect(pair_parser)
    @api.marshal_with(table_model)
    @api.doc(responses={
        200: 'Table computed',
        400: 'Invalid pair',
        501: 'Not implemented for family C'
    })
    def get(self):
        """Every nonzero KLV polynomial of the block"""
        args = pair_parser.parse_args()
        model, seed = _model_and_seed(args)
        rows = [
            {'from': a, 'to': b, 'polynomial': p, 'coefficients': [int(c) for c in coefficients.split()]}
            for a, b, p, coefficients in klv_table_rows(model, seed)
        ]
        return {'pair': str(model.kind), 'rows': rows}, 200
