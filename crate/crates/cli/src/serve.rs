use std::path::PathBuf;

use sda_service::{router, ServiceConfig};

use crate::CliError;

pub fn run(bind: &str, port: u16, static_dir: Option<PathBuf>, permissive_cors: bool) -> Result<(), CliError> {
    if let Some(dir) = &static_dir {
        if !dir.is_dir() {
            return Err(CliError::Io(format!("{}: not a directory", dir.display())));
        }
    }
    let runtime = tokio::runtime::Builder::new_multi_thread()
        .enable_all()
        .build()
        .map_err(|e| CliError::Io(format!("runtime: {e}")))?;

    runtime.block_on(async move {
        let addr = format!("{bind}:{port}");
        let listener = tokio::net::TcpListener::bind(&addr)
            .await
            .map_err(|e| CliError::Io(format!("cannot bind {addr}: {e}")))?;
        log::info!("listening on http://{}", listener.local_addr().map_err(|e| CliError::Io(e.to_string()))?);

        let app = router(&ServiceConfig {
            static_dir,
            permissive_cors,
        });
        axum::serve(listener, app)
            .with_graceful_shutdown(async {
                let _ = tokio::signal::ctrl_c().await;
                log::info!("shutting down");
            })
            .await
            .map_err(|e| CliError::Io(format!("server: {e}")))
    })
}
