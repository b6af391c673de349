from flask import Flask
import json
from fractions import Fraction
from flask_restx import Api
from flask_cors import CORS

from Service.utils.errors import OrbitToolkitError
from Service.utils.settings import configure_logging, load_settings


# Custom JSON encoder for the exact values returned by the models
class CustomJSONEncoder(json.JSONEncoder):
    def default(self, obj):
        if isinstance(obj, Fraction):
            return str(obj)
        if isinstance(obj, (set, frozenset)):
            return sorted(obj, key=str)
        if hasattr(obj, 'to_dict'):
            return obj.to_dict()
        return str(obj)


def create_app(settings=None):
    """
    Application factory

    Args:
        settings (Settings): Configuration; read from the environment when omitted

    Returns:
        Flask: The application with every namespace registered
    """
    settings = settings or load_settings()
    configure_logging(settings.log_level)

    app = Flask(__name__)
    app.config['SECRET_KEY'] = settings.secret_key
    app.config['ORBITS_SETTINGS'] = settings
    app.config['ORBITS_SEED'] = settings.seed

    CORS(app, resources={
        r"/api/*": {
            "origins": settings.cors_origins,
            "methods": ["GET", "OPTIONS"],
            "allow_headers": ["Content-Type"],
        }
    })

    api = Api(app, version='1.0', title='Symmetric Pair Orbit API',
              description='K-orbits on flag varieties, torus orbits on g_-1 and their parameter matching')

    @api.representation('application/json')
    def output_json(data, code, headers=None):
        resp = app.response_class(
            response=json.dumps(data, cls=CustomJSONEncoder, ensure_ascii=False),
            status=code,
            mimetype='application/json'
        )
        if headers:
            for header, value in headers.items():
                resp.headers[header] = value
        return resp

    @api.errorhandler(OrbitToolkitError)
    def handle_toolkit_error(error):
        if error.status_code >= 500:
            app.logger.error("%s: %s", type(error).__name__, error.message)
        return error.to_dict(), error.status_code

    from RootDatumController.routes.root_datum_routes import api as root_data_ns
    api.add_namespace(root_data_ns, path='/api/root-data')

    from TorusController.routes.torus_routes import api as torus_ns
    api.add_namespace(torus_ns, path='/api/torus')

    from ClanController.routes.orbit_routes import api as orbits_ns
    api.add_namespace(orbits_ns, path='/api/orbits')

    from CorrespondenceController.routes.correspondence_routes import api as correspondence_ns
    api.add_namespace(correspondence_ns, path='/api/correspondence')

    from KLVController.routes.klv_routes import api as klv_ns
    api.add_namespace(klv_ns, path='/api/klv')

    return app
