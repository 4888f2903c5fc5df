import logging
from datetime import datetime
from pathlib import Path
from typing import Dict, List, Optional, Union

from sqlmodel import JSON, Column, Field, Session, SQLModel, create_engine, select

from core.config import config
from core.reports import VerificationReport

log = logging.getLogger(__name__)

# --- Database Configuration ---
# The engine is created on first use so that tests and the CLI can point the
# ledger at another file before anything touches the disk.
_engine = None


def _database_url(path: Union[str, Path]) -> str:
    return f"sqlite:///{path}"


def get_engine():
    global _engine
    if _engine is None:
        _engine = create_engine(_database_url(config.database_path), echo=False,
                                connect_args={"check_same_thread": False})
    return _engine


# --- Data Models ---

class VerificationRun(SQLModel, table=True):
    """
    One execution of a verification suite.
    """
    id: Optional[int] = Field(default=None, primary_key=True)
    suite: str = Field(index=True)
    parameters: Dict = Field(sa_column=Column(JSON))
    status: str
    severity: str
    checked: int = 0
    violation_count: int = 0
    error: Optional[str] = None
    started_at: datetime = Field(default_factory=datetime.utcnow, nullable=False)
    duration: float = 0.0  # seconds


class ViolationRecord(SQLModel, table=True):
    """
    A single failed check of a recorded run. Values are stored as decimal
    strings; coefficients can exceed any SQL integer type.
    """
    id: Optional[int] = Field(default=None, primary_key=True)
    run_id: int = Field(foreign_key="verificationrun.id", index=True)
    check: str
    coordinates: Dict = Field(sa_column=Column(JSON))
    expected: str
    actual: str


# --- Database Initialization and Session ---

def create_db_and_tables(path: Union[str, Path, None] = None):
    """
    Creates the ledger tables. With `path`, the ledger is (re)bound to that file first.
    """
    global _engine
    if path is not None:
        _engine = create_engine(_database_url(path), echo=False, connect_args={"check_same_thread": False})
    SQLModel.metadata.create_all(get_engine())


def get_session() -> Session:
    """
    Provides a database session for performing transactions.
    """
    return Session(get_engine())


def record_report(report: VerificationReport, started_at: datetime, duration: float) -> int:
    """Stores a report and its violations; returns the new run id."""
    with get_session() as session:
        run = VerificationRun(
            suite=report.check,
            parameters=dict(report.parameters),
            status=report.status,
            severity=report.severity,
            checked=report.checked,
            violation_count=len(report.violations),
            error=report.error,
            started_at=started_at,
            duration=duration,
        )
        session.add(run)
        session.commit()
        session.refresh(run)
        for violation in report.violations:
            session.add(ViolationRecord(
                run_id=run.id,
                check=violation.check,
                coordinates=dict(violation.coordinates),
                expected=str(violation.expected),
                actual=str(violation.actual),
            ))
        session.commit()
        log.info(f"Recorded run {run.id} of '{report.check}' ({report.status})")
        return run.id


def list_runs(suite: Optional[str] = None, limit: int = 20) -> List[VerificationRun]:
    """Recorded runs, newest first."""
    with get_session() as session:
        statement = select(VerificationRun)
        if suite is not None:
            statement = statement.where(VerificationRun.suite == suite)
        statement = statement.order_by(VerificationRun.started_at.desc(), VerificationRun.id.desc()).limit(limit)
        return list(session.exec(statement).all())


def list_violations(run_id: int) -> List[ViolationRecord]:
    with get_session() as session:
        statement = select(ViolationRecord).where(ViolationRecord.run_id == run_id).order_by(ViolationRecord.id)
        return list(session.exec(statement).all())
