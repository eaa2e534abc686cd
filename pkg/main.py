import uvicorn

from prodcheck.config import settings

if __name__ == "__main__":
    uvicorn.run("prodcheck.api:app", host=settings.host, port=settings.port, reload=True, log_config=None)
