import json
from datetime import date
from pathlib import Path
from typing import List, Optional, Sequence

from neurotrade.models.market import AdjustedBar, TickerProvenance
from neurotrade.repositories.artifact_repo_base import ADJUSTED_BARS, PROVENANCE
from neurotrade.services.market_data import adjust_bars, parse_csv, serialize_csv


def _iso(day: Optional[date]) -> Optional[str]:
    return day.isoformat() if day else None


class ArtifactRepositoryMarketMixin:
    def save_adjusted_bars(self, symbol: str, bars: Sequence[AdjustedBar]):
        return self._write_text(self.path(symbol, ADJUSTED_BARS), serialize_csv(bars))

    def load_adjusted_bars(self, symbol: str) -> List[AdjustedBar]:
        # Adj Close equals Close in this file, so re-adjusting is the identity
        text = self._read_text(self.path(symbol, ADJUSTED_BARS), 'ingest')
        return adjust_bars(parse_csv(text))

    def save_provenance(self, symbol: str, prov: TickerProvenance):
        payload = {
            'symbol': prov.symbol,
            'source': str(prov.path) if prov.path else None,
            'rows': prov.rows,
            'first_date': _iso(prov.first_date),
            'last_date': _iso(prov.last_date),
        }
        return self._write_text(self.path(symbol, PROVENANCE), json.dumps(payload, sort_keys=True, indent=1) + '\n')

    def load_provenance(self, symbol: str) -> TickerProvenance:
        payload = json.loads(self._read_text(self.path(symbol, PROVENANCE), 'ingest'))
        return TickerProvenance(
            symbol=payload['symbol'],
            path=Path(payload['source']) if payload['source'] else None,
            rows=int(payload['rows']),
            first_date=date.fromisoformat(payload['first_date']) if payload['first_date'] else None,
            last_date=date.fromisoformat(payload['last_date']) if payload['last_date'] else None,
        )
