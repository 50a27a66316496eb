"""HTTP recognition service.

Stateless JSON-over-HTTP around one immutable model loaded at startup:

    POST /recognize   {"strokes": [[[x,y],...],...], "topk": 5}
    GET  /model/info  class count, template counts, config snapshot
    GET  /healthz     liveness
    POST /echo        returns the submitted strokes verbatim (client
                      pass-through checks)

Malformed ink gets a 400 with the parse diagnostic; recognition output on
the wire is exactly the library result serialized.
"""

from __future__ import annotations

import os

from fastapi import FastAPI, HTTPException, Request
from fastapi.responses import JSONResponse

from .ink import InkError, symbol_from_json
from .recognizer import recognize
from .templates import Model, load_model


def create_app(model: Model) -> FastAPI:
    app = FastAPI(title="inkmatch recognition service")

    @app.get("/healthz")
    def healthz():
        return {"status": "ok"}

    @app.get("/model/info")
    def model_info():
        template_counts = {}
        for t in model.iter_templates():
            template_counts[t.label] = template_counts.get(t.label, 0) + 1
        return {
            "version": model.version,
            "class_count": len(model.classes),
            "template_count": model.template_count(),
            "templates_per_class": {str(k): v for k, v in sorted(template_counts.items())},
            "config": model.config.to_dict(),
        }

    async def _parse_body(request: Request) -> dict:
        try:
            body = await request.json()
        except Exception as e:
            raise HTTPException(status_code=400, detail=f"invalid JSON body: {e}")
        if not isinstance(body, dict):
            raise HTTPException(status_code=400, detail="body must be a JSON object")
        return body

    @app.post("/recognize")
    async def recognize_endpoint(request: Request):
        body = await _parse_body(request)
        try:
            symbol = symbol_from_json({"label": None, "writer": None, "strokes": body.get("strokes")})
        except (ValueError, InkError) as e:
            raise HTTPException(status_code=400, detail=str(e))
        topk = body.get("topk", 5)
        if not isinstance(topk, int) or topk < 1:
            raise HTTPException(status_code=400, detail="topk must be a positive integer")
        try:
            result = recognize(symbol, model, topk=topk)
        except ValueError as e:
            raise HTTPException(status_code=400, detail=str(e))
        payload = result.to_dict()
        payload["model_version"] = model.version
        return JSONResponse(payload)

    @app.post("/echo")
    async def echo(request: Request):
        body = await _parse_body(request)
        if "strokes" not in body:
            raise HTTPException(status_code=400, detail="body needs a 'strokes' field")
        return JSONResponse({"strokes": body["strokes"]})

    return app


def serve(model_path: str | None, bind: str = "127.0.0.1:8600") -> None:
    """Load the model and serve until terminated."""
    import uvicorn

    model_path = model_path or os.environ.get("INKMATCH_MODEL")
    if not model_path:
        raise SystemExit("no model: pass --model or set INKMATCH_MODEL")
    model = load_model(model_path)
    host, _, port = bind.rpartition(":")
    if not host or not port.isdigit():
        raise SystemExit(f"invalid bind address: {bind!r} (expected host:port)")
    uvicorn.run(create_app(model), host=host, port=int(port))
