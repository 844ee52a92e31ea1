"""
neurotrade API - Main FastAPI Application
"""

import uvicorn
from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from neurotrade.api.routes import router
from neurotrade.core.config import Config
from neurotrade.core.logging import setup_logging

# Create FastAPI app
app = FastAPI(
    title="neurotrade API",
    description="Indicators, labeling, backtests and reports of the trading-signal pipeline",
    version="1.0.0"
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(router, prefix="/api/v1", tags=["pipeline"])


@app.get("/")
def root():
    """Root endpoint"""
    return {"message": "neurotrade API", "version": "1.0.0"}


@app.get("/health")
def health_check():
    """Health check endpoint"""
    return {"status": "healthy"}


if __name__ == "__main__":
    setup_logging()
    uvicorn.run(app, host=Config.API_HOST, port=Config.API_PORT)
