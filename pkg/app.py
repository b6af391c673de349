from flask import redirect

from Service import create_app

# Create the app with all controllers registered
app = create_app()


# The Swagger UI lives at the root; /docs is kept as a short alias
@app.route('/docs')
def docs_redirect():
    return redirect('/')


if __name__ == '__main__':
    settings = app.config['ORBITS_SETTINGS']
    app.run(debug=settings.debug, host=settings.host, port=settings.port)
