from fastapi import APIRouter

from app.api.endpoints import modules, supports

api_router = APIRouter()
api_router.include_router(modules.router, prefix="/modules", tags=["modules"])
api_router.include_router(supports.router, prefix="/supports", tags=["supports"])
