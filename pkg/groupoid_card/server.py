import logging

from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from groupoid_card.api import groupoids, relfin, series, spaces, structures
from groupoid_card.core.config import settings
from groupoid_card.core.exceptions import GroupoidCardError, ValidationError
from groupoid_card.core.logger import configure_logging

DESCRIPTION = (
    "Groupoid cardinalities, stuff-type generating functions and "
    "homomorphism-counting equivalence tests with exact rational arithmetic"
)

configure_logging()
logger = logging.getLogger(__name__)

app = FastAPI(
    title=settings.APP_NAME,
    version=settings.APP_VERSION,
    description=DESCRIPTION,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.ALLOWED_ORIGINS,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(GroupoidCardError)
async def groupoid_card_exception_handler(request: Request, exc: GroupoidCardError):
    """Invalid input is a 422; a failed theorem check is a server error"""
    status_code = 422 if isinstance(exc, ValidationError) else 500
    if status_code == 500:
        logger.error("%s: %s", exc.error, exc.message)
    return JSONResponse(status_code=status_code, content=exc.to_dict())


@app.exception_handler(Exception)
async def global_exception_handler(request: Request, exc: Exception):
    """Global exception handler for unhandled exceptions"""
    logger.exception("unhandled error on %s", request.url.path)
    return JSONResponse(
        status_code=500,
        content={
            "error": "Internal server error",
            "details": str(exc) if settings.DEBUG else "An unexpected error occurred",
        },
    )


app.include_router(groupoids.router)
app.include_router(series.router)
app.include_router(relfin.router)
app.include_router(structures.router)
app.include_router(spaces.router)


@app.get("/health", tags=["health"])
async def health_check():
    """Health check endpoint"""
    return {
        "name": settings.APP_NAME,
        "version": settings.APP_VERSION,
        "description": DESCRIPTION,
    }
