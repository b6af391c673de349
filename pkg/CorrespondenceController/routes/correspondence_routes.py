from flask import current_app
from flask_restx import Namespace, Resource, fields, reqparse

from ClanController.models.pair_model import build_pair_model
from CorrespondenceController.models.correspondence import ak_of_QS, correspondence_report, phi_surjectivity
from RootDatumController.models.root_datum import build_root_datum
from Service.utils.parsing import parse_kind, parse_ordering, parse_pair

api = Namespace('correspondence', description='The orbits Q_S and the parameter map Phi')

qs_entry_model = api.model('QSEntry', {
    'S': fields.List(fields.Integer, description='Subset of simple roots'),
    'clan': fields.String(description='The orbit Q_S'),
    'dim': fields.Integer(description='dim Q_S'),
    'dimExpected': fields.Integer(description='dim Q_empty + |S|'),
    'closurePassCount': fields.Integer(description='Subsets S\' for which the closure law holds'),
    'consistent': fields.Boolean(description='Monoid product and epsilon(x_S) agree'),
    'AK': fields.String(description='A_K(epsilon(x_S))'),
})

witness_model = api.model('SurjectivityWitness', {
    'S': fields.List(fields.Integer, description='Failing subset'),
    'AT': fields.String(description='A_T(x_S)'),
    'ATOrder': fields.Integer(description='|A_T(x_S)|'),
    'AKOrder': fields.Integer(description='|A_K(epsilon(x_S))|, when known'),
})

qs_report_model = api.model('QSReport', {
    'pair': fields.String(description='Symmetric pair'),
    'ordering': fields.List(fields.Integer, description='Ordering of the simple roots'),
    'entries': fields.List(fields.Nested(qs_entry_model)),
    'dimensionPassed': fields.Boolean,
    'closurePassed': fields.Boolean,
    'qsConsistent': fields.Boolean,
    'qsInjective': fields.Boolean,
    'phiSurjective': fields.Boolean,
    'witnesses': fields.List(fields.Nested(witness_model)),
})

phi_model = api.model('PhiVerdict', {
    'kind': fields.String(description='Group kind'),
    'ordering': fields.List(fields.Integer, description='Ordering of the simple roots'),
    'surjective': fields.Boolean(description='Whether Phi reaches every torus parameter'),
    'witnesses': fields.List(fields.Nested(witness_model)),
})

qs_parser = reqparse.RequestParser()
qs_parser.add_argument('pair', type=str, location='args', required=True, help='Symmetric pair such as A:2,2 or C:2')
qs_parser.add_argument('ordering', type=str, location='args', default='', help='Ordering such as 2,1,3 or β,α')
qs_parser.add_argument('seed', type=int, location='args', help='Seed for generic pencil samples')

phi_parser = reqparse.RequestParser()
phi_parser.add_argument('kind', type=str, location='args', required=True, help='GL:n, SL:n or Sp:n')
phi_parser.add_argument('ordering', type=str, location='args', default='', help='Ordering of the simple roots')


@api.route('/qs')
class QSReport(Resource):
    @api.expect(qs_parser)
    @api.marshal_with(qs_report_model)
    @api.doc(responses={
        200: 'Report computed',
        400: 'Invalid pair or ordering',
        500: 'Internal consistency check failed'
    })
    def get(self):
        """The Q_S of an ordering with the dimension, closure and Phi checks"""
        args = qs_parser.parse_args()
        settings = current_app.config['ORBITS_SETTINGS']
        seed = args['seed'] if args['seed'] is not None else settings.seed
        model = build_pair_model(parse_pair(args['pair'], settings))
        ordering = parse_ordering(args['ordering'], model.kind.cartan_type, model.rank)
        report = correspondence_report(model, ordering, seed)
        for entry in report['entries']:
            entry['AK'] = str(ak_of_QS(model, ordering, entry['S']))
        report['pair'] = str(model.kind)
        return report, 200


@api.route('/phi')
class PhiSurjectivity(Resource):
    @api.expect(phi_parser)
    @api.marshal_with(phi_model)
    @api.doc(responses={
        200: 'Verdict computed',
        400: 'Invalid kind or ordering',
        501: 'Not implemented for Spin and SO kinds'
    })
    def get(self):
        """Whether Phi is surjective, with every failing subset"""
        args = phi_parser.parse_args()
        kind = parse_kind(args['kind'])
        rank = build_root_datum(kind).rank
        ordering = parse_ordering(args['ordering'], kind.cartan_type, rank)
        verdict = phi_surjectivity(kind, ordering)
        return {
            'kind': str(kind),
            'ordering': list(ordering),
            'surjective': verdict.surjective,
            'witnesses': list(verdict.witnesses),
        }, 200
